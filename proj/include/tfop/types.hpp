/*
 * Core vocabulary for finite time-frequency operator analysis on C^N.
 *
 * Everything lives on the cyclic group Z_N: signals are length-N complex
 * vectors, operators are N x N kernels kappa(t,s), and time-frequency
 * representations are N x N arrays indexed by (lag b, modulation nu).
 * All index arithmetic is mod N and all phases are integer powers of
 * w = exp(2*pi*i/N).
 */
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tfop {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

/** Nonnegative remainder of k mod n (n > 0), valid for negative k. */
inline int imod(long long k, int n) {
    long long r = k % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/**
 * Separable sampling lattice a*Z_N x b*Z_N for Gabor analysis:
 * time step a and frequency step b, both dividing N. There are
 * M = N/a time shifts and K = N/b frequency shifts.
 *
 * The adjoint lattice has steps (N/b, N/a); functions generated by
 * lattice masks (spreading multipliers) are periodic with exactly
 * those periods, so the fundamental domain for folded quantities is
 * [0, N/b) x [0, N/a).
 */
struct TFLattice {
    int n;
    int a;
    int b;

    TFLattice(int n_, int a_, int b_) : n(n_), a(a_), b(b_) {
        if (n <= 0 || a <= 0 || b <= 0)
            throw std::invalid_argument("lattice: parameters must be positive");
        if (n % a != 0 || n % b != 0)
            throw std::invalid_argument("lattice: steps must divide the signal length");
    }

    int time_shifts() const { return n / a; }  // M
    int freq_shifts() const { return n / b; }  // K
    int rank() const { return time_shifts() * freq_shifts(); }
    double redundancy() const { return double(n) / (double(a) * double(b)); }

    // adjoint-lattice steps, equal to the periods of any lattice-mask
    // transform in (lag, modulation)
    int adjoint_time_step() const { return n / b; }
    int adjoint_freq_step() const { return n / a; }

    bool operator==(const TFLattice& o) const { return n == o.n && a == o.a && b == o.b; }
};

/** Raised when a Gabor system fails to be a frame (or is too ill-conditioned to invert). */
struct FrameError : std::runtime_error {
    double smallest_eigenvalue;
    double largest_eigenvalue;
    FrameError(const std::string& what, double smallest, double largest)
        : std::runtime_error(what), smallest_eigenvalue(smallest), largest_eigenvalue(largest) {}
};

/** Raised when the folded window correlation vanishes at a quotient point
 *  (the rank-one projection family is not a Riesz sequence). */
struct RieszError : std::runtime_error {
    int lag;
    int modulation;
    double value;
    double threshold;
    RieszError(const std::string& what, int lag_, int mod_, double value_, double threshold_)
        : std::runtime_error(what), lag(lag_), modulation(mod_), value(value_), threshold(threshold_) {}
};

/** Raised when a spreading function has mass outside a declared support box. */
struct SupportError : std::runtime_error {
    std::vector<std::pair<int, int>> offenders;  // (lag, modulation), centered coordinates
    SupportError(const std::string& what, std::vector<std::pair<int, int>> offenders_)
        : std::runtime_error(what), offenders(std::move(offenders_)) {}
};

/** Raised in strict mode when a prototype is not representable in the
 *  requested multiplier form to the demanded residual. */
struct StructureError : std::runtime_error {
    double residual;
    double tolerance;
    StructureError(const std::string& what, double residual_, double tolerance_)
        : std::runtime_error(what), residual(residual_), tolerance(tolerance_) {}
};

/** Hilbert-Schmidt inner product sum_{t,s} A(t,s) * conj(B(t,s)). */
inline Complex hs_inner(const CMat& x, const CMat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("hs_inner: dimension mismatch");
    return (x.array() * y.array().conjugate()).sum();
}

inline double hs_norm(const CMat& x) { return x.norm(); }

}  // namespace tfop
