/*
 * Deterministic random source for experiments.
 *
 * mt19937_64 with an explicit bit-to-double mapping (top 53 bits over
 * 2^53), so identical seeds give identical draws on every platform and
 * the draw sequence is part of the file-format contract for seeded runs.
 */
#pragma once

#include "tfop/types.hpp"

#include <cstdint>
#include <random>

namespace tfop {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /** Uniform on [0, 1). */
    double u01() { return double(eng_() >> 11) * 0x1.0p-53; }

    /** Uniform on [-0.5, 0.5). */
    double sym() { return u01() - 0.5; }

    /** Complex with independent uniform [-0.5, 0.5) parts. */
    Complex csym() {
        const double re = sym();
        const double im = sym();
        return {re, im};
    }

    CVec cvec(int n) {
        CVec v(n);
        for (int i = 0; i < n; ++i) v[i] = csym();
        return v;
    }

    CMat cmat(int rows, int cols) {
        CMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = csym();
        return m;
    }

    std::uint64_t raw() { return eng_(); }

    static constexpr const char* algorithm() { return "mt19937_64/u53"; }

private:
    std::mt19937_64 eng_;
};

}  // namespace tfop
