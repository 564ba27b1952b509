// Shared fixtures and independent reference implementations ("oracles")
// used to pin down the library's conventions. Everything here is written
// the slow, obvious way on purpose.
#pragma once

#include "tfop/rng.hpp"
#include "tfop/types.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

using tfop::CMat;
using tfop::Complex;
using tfop::CVec;
using tfop::imod;

inline Complex unit_phase(long long k, int n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * double(imod(k, n)) / double(n));
}

inline CVec tf_shift(const CVec& f, int b, int nu) {
    const int n = static_cast<int>(f.size());
    CVec out(n);
    for (int t = 0; t < n; ++t)
        out[t] = unit_phase(static_cast<long long>(nu) * t, n) * f[imod(t - b, n)];
    return out;
}

inline CMat stft(const CVec& f, const CVec& g) {
    const int n = static_cast<int>(f.size());
    CMat out(n, n);
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu) {
            Complex acc{0.0, 0.0};
            for (int t = 0; t < n; ++t)
                acc += f[t] * std::conj(g[imod(t - b, n)]) *
                       unit_phase(-static_cast<long long>(nu) * t, n);
            out(b, nu) = acc;
        }
    return out;
}

inline CMat symplectic_dft(const CMat& f) {
    const int n = static_cast<int>(f.rows());
    CMat out(n, n);
    for (int t = 0; t < n; ++t)
        for (int xi = 0; xi < n; ++xi) {
            Complex acc{0.0, 0.0};
            for (int b = 0; b < n; ++b)
                for (int nu = 0; nu < n; ++nu)
                    acc += f(b, nu) * unit_phase(-(static_cast<long long>(b) * xi -
                                                   static_cast<long long>(t) * nu),
                                                 n);
            out(t, xi) = acc / double(n);
        }
    return out;
}

/** Rank-one lattice projection f -> <f, pi(lambda) g> pi(lambda) h as a kernel. */
inline CMat lattice_projection(const CVec& g, const CVec& h, int la, int lb) {
    const CVec gl = tf_shift(g, la, lb);
    const CVec hl = tf_shift(h, la, lb);
    return hl * gl.adjoint();
}

/** Column stack of vectorized lattice projections, lambda = m*K + n. */
inline CMat projection_columns(const CVec& g, const CVec& h, const tfop::TFLattice& lat) {
    const int n = lat.n;
    const int mc = lat.time_shifts();
    const int kc = lat.freq_shifts();
    CMat p(static_cast<long long>(n) * n, static_cast<long long>(mc) * kc);
    for (int m = 0; m < mc; ++m)
        for (int k = 0; k < kc; ++k) {
            const CMat pr = lattice_projection(g, h, m * lat.a, k * lat.b);
            p.col(static_cast<long long>(m) * kc + k) =
                Eigen::Map<const CVec>(pr.data(), pr.size());
        }
    return p;
}

/** Least-squares mask for op against the lattice projections (normal equations by SVD). */
inline CMat lsq_mask(const CMat& op, const CVec& g, const CVec& h, const tfop::TFLattice& lat) {
    const CMat p = projection_columns(g, h, lat);
    const Eigen::Map<const CVec> rhs(op.data(), op.size());
    const CVec c = p.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    CMat mask(lat.time_shifts(), lat.freq_shifts());
    for (int m = 0; m < mask.rows(); ++m)
        for (int k = 0; k < mask.cols(); ++k) mask(m, k) = c[m * mask.cols() + k];
    return mask;
}

inline double rel(double diff, double scale) { return scale > 0.0 ? diff / scale : diff; }

inline double rel_err(const CMat& got, const CMat& want) {
    return rel((got - want).norm(), want.norm());
}

inline double rel_err(const CVec& got, const CVec& want) {
    return rel((got - want).norm(), want.norm());
}

}  // namespace oracle
