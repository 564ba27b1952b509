/*
 * Multiple Gabor multipliers (MGM): sums of Gabor multipliers sharing one
 * analysis window and lattice but with several synthesis windows,
 *   MM f = sum_j GM(mask_j; g, h_j) f.
 * Best approximation decouples into an independent J x J Hermitian solve
 * at every point of the quotient grid; when the synthesis windows are
 * adjoint-lattice shifts of a single window the system matrix acquires a
 * twisted-convolution structure.
 */
#pragma once

#include "tfop/gm.hpp"
#include "tfop/types.hpp"

namespace tfop {

/** Per-quotient-point J x J matrices Gamma(b,nu)_{jj'} = folded conj(V_j) V_j'. */
struct GammaField {
    int lag_count;         // N/b
    int mod_count;         // N/a
    int window_count;      // J
    std::vector<CMat> pt;  // row-major over the quotient grid, each J x J

    const CMat& at(int bq, int nq) const { return pt[static_cast<size_t>(bq) * mod_count + nq]; }
    CMat& at(int bq, int nq) { return pt[static_cast<size_t>(bq) * mod_count + nq]; }
};

/** Folded Gram field of the synthesis family against the analysis window.
 *  Every matrix is Hermitian positive semidefinite. */
GammaField gamma_field(const CVec& g, const std::vector<CVec>& hs, const TFLattice& lat);

/** Smallest / largest eigenvalue of Gamma at each quotient point. */
RMat gamma_min_eigenvalues(const GammaField& field);
RMat gamma_max_eigenvalues(const GammaField& field);

CVec mgm_apply(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
               const TFLattice& lat, const CVec& f);

CMat mgm_matrix(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
                const TFLattice& lat);

/** Spreading of the sum: 1/N sum_j M_j^(d)(b,nu) V_g h_j(b,nu). */
CMat mgm_spreading(const std::vector<CMat>& masks, const CVec& g, const std::vector<CVec>& hs,
                   const TFLattice& lat);

/**
 * Masks of the best Hilbert-Schmidt approximation of op by an MGM with
 * the given windows: at each quotient point solve
 *   Gamma(b,nu) x = folded [eta . conj(V_j)](b,nu),
 * then pull N*x back through mask_from_transform per window. Points where
 * Gamma is singular beyond condition 1e12 raise RieszError under
 * SingularPolicy::fail; under zero_fill the solve uses the Hermitian
 * pseudo-inverse. With one window this coincides with best_gm_mask.
 */
std::vector<CMat> best_mgm(const CMat& op, const CVec& g, const std::vector<CVec>& hs,
                           const TFLattice& lat, SingularPolicy policy = SingularPolicy::fail);

struct MgmErrorReport {
    double err_sq;
    double err_rel;
    std::vector<CMat> masks;
};

/** Best-MGM approximation error (exact, in the spreading domain). */
MgmErrorReport mgm_error_report(const CMat& op, const CVec& g, const std::vector<CVec>& hs,
                                const TFLattice& lat, SingularPolicy policy = SingularPolicy::fail);

struct AdjointShiftReport {
    double structure_dev;  // max |Gamma - phase * A| over points and window pairs
    double mask_dev;       // max |masks via A-system - best_mgm masks|
};

/**
 * Structure check for synthesis windows h_j = pi(u_j, w_j) h with
 * (u_j, w_j) on the adjoint lattice (N/b) Z x (N/a) Z. Builds
 *   A_{du,dw}(b,nu) = folded  w^{-du nu'} conj(V(b',nu')) V(b'-du, nu'-dw),
 * verifies Gamma_{j0 j} = w^{u_j (w_j - w_j0)} A_{u_j-u_j0, w_j-w_j0},
 * i.e. the normal equations form a right twisted convolution over the
 * shift group, and re-solves the approximation of op through that
 * structure, comparing against the generic best_mgm masks.
 */
AdjointShiftReport adjoint_lattice_gamma(const CVec& g, const CVec& h, const TFLattice& lat,
                                         const std::vector<std::pair<int, int>>& shifts,
                                         const CMat& op);

struct ProjectionFrameExpansion {
    CMat coef;            // c(lambda, mu), (M1 K1) x (M2 K2), lambda = m1*K1+n1
    CMat reconstruction;  // sum c(lambda,mu) |g~_lambda><h~_mu|
};

/**
 * Expansion of op over the tensor family of rank-one TF projections
 * f -> <f, pi(mu) h> pi(lambda) g: coefficients c(lambda,mu) =
 * <op pi(mu) h, pi(lambda) g>, synthesis through the canonical dual
 * windows of (g, lat1) and (h, lat2). Reconstructs op exactly when both
 * factors are frames (dual_window throws otherwise).
 */
ProjectionFrameExpansion projection_frame_expand(const CMat& op, const CVec& g, const CVec& h,
                                                 const TFLattice& lat1, const TFLattice& lat2);

}  // namespace tfop
