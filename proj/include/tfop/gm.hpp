/*
 * Gabor multipliers: diagonal operators in a Gabor coefficient domain,
 *   GM(m; g, h) f = sum_{m,n} m(m,n) V_g f(ma, nb) pi(ma, nb) h,
 * their spreading structure, and best Hilbert-Schmidt approximation of a
 * given operator by such a multiplier.
 *
 * The spreading function of GM(m) is the product of a lattice-periodic
 * transform of the mask with V_g h; all approximation formulas therefore
 * live on the quotient grid [0, N/b) x [0, N/a) ("folded" quantities).
 */
#pragma once

#include "tfop/types.hpp"

namespace tfop {

/** What to do at quotient points where the folded denominator vanishes. */
enum class SingularPolicy { fail, zero_fill };

/**
 * Lattice transform of an M x K mask, sampled on the quotient grid:
 *   M^(d)(b,nu) = sum_{m,n} mask(m,n) w^{n b_step b - m a nu},
 * returned as an (N/b) x (N/a) array over [0, N/b) x [0, N/a); the
 * extension to all of Z_N^2 is periodic with exactly these periods.
 */
CMat mask_transform(const CMat& mask, const TFLattice& lat);

/** Inverse of mask_transform:
 *  mask(m,n) = 1/(MK) sum_{(b,nu) in quotient} Mq(b,nu) w^{-(n b_step b - m a nu)}. */
CMat mask_from_transform(const CMat& mq, const TFLattice& lat);

/** Apply GM(mask; g, h) to a signal: analyze, multiply, synthesize. */
CVec gm_apply(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat, const CVec& f);

/** Dense N x N matrix of GM(mask; g, h). */
CMat gm_matrix(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat);

/**
 * Spreading function of GM(mask; g, h):
 *   eta(b,nu) = 1/N * M^(d)(b,nu) * V_g h(b,nu),
 * consistent with spreading_from_kernel(gm_matrix(...)).
 */
CMat gm_spreading(const CMat& mask, const CVec& g, const CVec& h, const TFLattice& lat);

/**
 * Folded window-correlation weight on the quotient grid:
 *   U(b,nu) = sum_{k<b_step, l<a} |V_g h(b + k N/b, nu + l N/a)|^2.
 * U bounded away from zero is equivalent to the lattice family of
 * rank-one projections being a Riesz sequence.
 */
RMat u_function(const CVec& g, const CVec& h, const TFLattice& lat);

/**
 * Mask of the best Hilbert-Schmidt approximation of op by GM(.; g, h):
 * on the quotient grid the optimal multiplier is
 *   M(b,nu) = N * [folded conj(V_g h) . eta_op](b,nu) / U(b,nu),
 * pulled back to an M x K mask by mask_from_transform. Quotient points
 * with U below 1e-10 * max(U) raise RieszError under SingularPolicy::fail
 * and contribute a zero mask under SingularPolicy::zero_fill.
 */
CMat best_gm_mask(const CMat& op, const CVec& g, const CVec& h, const TFLattice& lat,
                  SingularPolicy policy = SingularPolicy::fail);

/** Same computation starting from the operator's spreading function. */
CMat best_gm_mask_from_spreading(const CMat& eta, const CVec& g, const CVec& h,
                                 const TFLattice& lat,
                                 SingularPolicy policy = SingularPolicy::fail);

struct GmErrorReport {
    double err_sq;       // ||op - GM(best mask)||_HS^2, computed exactly
    double err_rel;      // ||op - APP||_HS / ||op + APP||_HS
    double bound;        // ||op||_HS^2 * max over quotient of (1 - efficiency)
    RMat efficiency;     // per-quotient-point efficiency in [0, 1]
    CMat mask;           // the best mask itself
};

/**
 * Best-approximation error, the a-priori bound it satisfies, and the
 * per-point efficiency field
 *   E(b,nu) = |folded conj(V).eta|^2 / (Gamma_op(b,nu) * U(b,nu)),
 * where Gamma_op is the folded squared spreading. E = 1 where Gamma_op
 * vanishes, E = 0 where only U vanishes. The exact squared error equals
 * N * sum over the quotient of Gamma_op (1 - E).
 */
GmErrorReport gm_error_report(const CMat& op, const CVec& g, const CVec& h, const TFLattice& lat,
                              SingularPolicy policy = SingularPolicy::fail);

/**
 * Verify that eta is supported in the centered box [-t0,t0] x [-xi0,xi0]
 * (cyclically; throws SupportError listing violations in centered
 * coordinates) and report whether the box is underspread, t0*xi0 < N/4.
 */
bool underspread_check(const CMat& eta, int t0, int xi0);

}  // namespace tfop
