/*
 * Internal numeric helpers: exact root-of-unity tables, compensated
 * summation, and thin DFT wrappers around Eigen's FFT module.
 */
#pragma once

#include "tfop/types.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>

namespace tfop::detail {

/**
 * Table of the N-th roots of unity, w^k = exp(2*pi*i*k/N).
 *
 * Every phase in this library is an integer power of w; exponents are
 * reduced mod N *before* evaluation so that equal angles give bitwise
 * equal values regardless of how the exponent was assembled.
 */
class PhaseTable {
public:
    explicit PhaseTable(int n) : n_(n), w_(n) {
        for (int k = 0; k < n; ++k)
            w_[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
    }

    const Complex& operator()(long long k) const { return w_[imod(k, n_)]; }
    int modulus() const { return n_; }

private:
    int n_;
    std::vector<Complex> w_;
};

/** Kahan compensated accumulator for complex sums (folding loops). */
class KahanSum {
public:
    void add(const Complex& x) {
        const Complex y = x - c_;
        const Complex t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    Complex value() const { return s_; }

private:
    Complex s_{0.0, 0.0};
    Complex c_{0.0, 0.0};
};

class KahanSumReal {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/** Unscaled forward DFT, X(k) = sum_t x(t) w^{-kt}. */
inline CVec dft(const CVec& x) {
    Eigen::FFT<double> fft;
    CVec out(x.size());
    fft.fwd(out, x);
    return out;
}

/** Unscaled inverse DFT, X(t) = sum_k x(k) w^{+kt}  (no 1/N). */
inline CVec idft_unscaled(const CVec& x) {
    return dft(x.conjugate()).conjugate();
}

}  // namespace tfop::detail
