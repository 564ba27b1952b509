#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tfop/tfr.hpp"
#include "tfop/window.hpp"

#include <cmath>
#include <numbers>

using namespace tfop;

TEST_CASE("lattice validation and derived quantities") {
    const TFLattice lat(8, 2, 4);
    CHECK(lat.time_shifts() == 4);
    CHECK(lat.freq_shifts() == 2);
    CHECK(lat.rank() == 8);
    CHECK(lat.redundancy() == doctest::Approx(1.0));
    CHECK(lat.adjoint_time_step() == 2);
    CHECK(lat.adjoint_freq_step() == 4);
    CHECK_THROWS_AS(TFLattice(8, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(TFLattice(8, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(TFLattice(0, 1, 1), std::invalid_argument);
}

TEST_CASE("gauss window: normalization, symmetry, width semantics") {
    for (int n : {8, 16, 33}) {
        const CVec g = gauss_window(n, 1.0);
        CHECK(std::abs(g.norm() - 1.0) < 1e-14);
        for (int t = 0; t < n; ++t) {
            CHECK(g[imod(-t, n)] == g[t]);  // circular evenness, exact
            CHECK(g[t].imag() == 0.0);
            CHECK(g[t].real() > 0.0);
        }
    }

    // width 1 matches the periodized envelope exp(-pi t^2 / N) directly
    const int n = 16;
    const CVec g = gauss_window(n, 1.0);
    Eigen::VectorXd ref(n);
    for (int t = 0; t < n; ++t) {
        const int tc = imod(t + n / 2, n) - n / 2;
        double v = 0.0;
        for (int r = -8; r <= 8; ++r)
            v += std::exp(-std::numbers::pi * std::pow(double(tc + r * n), 2) / double(n));
        ref[t] = v;
    }
    ref /= ref.norm();
    for (int t = 0; t < n; ++t) CHECK(std::abs(g[t].real() - ref[t]) < 1e-13);

    // larger width = narrower in time
    const CVec wide = gauss_window(n, 0.5);
    const CVec narrow = gauss_window(n, 2.0);
    CHECK(narrow[0].real() > wide[0].real());
    CHECK(narrow[n / 2].real() < wide[n / 2].real());

    CHECK_THROWS_AS(gauss_window(16, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_window(16, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_window(0, 1.0), std::invalid_argument);
}

TEST_CASE("frame operator equals the rank-one sum over the lattice") {
    Rng rng(11);
    const TFLattice lat(8, 2, 2);
    const CVec g = rng.cvec(8);
    CMat direct = CMat::Zero(8, 8);
    for (int m = 0; m < lat.time_shifts(); ++m)
        for (int k = 0; k < lat.freq_shifts(); ++k) {
            const CVec gl = oracle::tf_shift(g, m * lat.a, k * lat.b);
            direct += gl * gl.adjoint();
        }
    const CMat s = frame_operator(g, lat);
    CHECK((s - direct).norm() < 1e-12 * direct.norm());
    CHECK((s - s.adjoint()).norm() < 1e-12 * s.norm());
}

TEST_CASE("dual window reconstructs and obeys the frame error contract") {
    const TFLattice lat(16, 2, 4);
    const CVec g = gauss_window(16, 1.0);
    const CVec h = dual_window(g, lat);
    Rng rng(3);
    const CVec f = rng.cvec(16);

    // frame reconstruction f = sum <f, g_lambda> h_lambda
    CVec rec = CVec::Zero(16);
    for (int m = 0; m < lat.time_shifts(); ++m)
        for (int k = 0; k < lat.freq_shifts(); ++k) {
            const CVec gl = oracle::tf_shift(g, m * lat.a, k * lat.b);
            const CVec hl = oracle::tf_shift(h, m * lat.a, k * lat.b);
            rec += gl.dot(f) * hl;  // Eigen dot conjugates its *first* argument
        }
    CHECK(oracle::rel_err(rec, f) < 1e-10);

    const FrameInfo info = frame_info(g, lat);
    CHECK(info.lower > 0.0);
    CHECK(info.upper >= info.lower);
    CHECK(info.is_frame);
}

TEST_CASE("impulse on a coarse lattice: diagonal singular frame operator") {
    const TFLattice lat(8, 4, 2);
    CVec g = CVec::Zero(8);
    g[0] = 1.0;
    const CMat s = frame_operator(g, lat);
    // diagonal, supported on the time-shift orbit {0, 4}
    for (int t = 0; t < 8; ++t)
        for (int u = 0; u < 8; ++u)
            if (t != u) CHECK(std::abs(s(t, u)) == 0.0);
    CHECK(s(0, 0).real() == doctest::Approx(4.0));
    CHECK(s(4, 4).real() == doctest::Approx(4.0));
    CHECK(std::abs(s(1, 1)) == 0.0);

    CHECK(!frame_info(g, lat).is_frame);
    CHECK_THROWS_AS(dual_window(g, lat), FrameError);
    try {
        dual_window(g, lat);
    } catch (const FrameError& e) {
        CHECK(e.smallest_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(e.largest_eigenvalue == doctest::Approx(4.0));
    }
}

TEST_CASE("orthonormal shift basis: dual equals the window") {
    const TFLattice lat(8, 1, 8);  // all time shifts, single frequency
    CVec g = CVec::Zero(8);
    g[0] = 1.0;
    const CVec h = dual_window(g, lat);
    CHECK((h - g).norm() < 1e-13);
}

TEST_CASE("undersampled lattice is rejected before any linear algebra") {
    const CVec g = gauss_window(16, 1.0);
    CHECK_THROWS_AS(dual_window(g, TFLattice(16, 8, 8)), std::invalid_argument);
}

TEST_CASE("hs_inner: sesquilinear, positive, dimension-checked") {
    Rng rng(5);
    const CMat a = rng.cmat(6, 6);
    const CMat b = rng.cmat(6, 6);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
    CHECK(std::abs(hs_inner(a, a).real() - a.squaredNorm()) < 1e-12);
    CHECK(hs_inner(a, a).real() > 0.0);
    CHECK(std::abs(hs_inner(a, a).imag()) < 1e-14);
    CHECK_THROWS_AS(hs_inner(a, rng.cmat(5, 5)), std::invalid_argument);
}
