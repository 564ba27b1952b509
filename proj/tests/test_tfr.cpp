#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tfop/tfr.hpp"
#include "tfop/window.hpp"

using namespace tfop;

TEST_CASE("tf_shift matches the reference and is unitary") {
    Rng rng(101);
    for (int n : {7, 8}) {
        const CVec f = rng.cvec(n);
        for (int b = -n; b <= n; ++b)
            for (int nu = -n; nu <= n; ++nu) {
                const CVec got = tf_shift(f, b, nu);
                CHECK((got - oracle::tf_shift(f, b, nu)).norm() < 1e-14);
                CHECK(std::abs(got.norm() - f.norm()) < 1e-14);
            }
    }
}

TEST_CASE("tf_shift_matrix agrees with the vector action") {
    Rng rng(102);
    const int n = 8;
    const CVec f = rng.cvec(n);
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu) {
            const CMat p = tf_shift_matrix(n, b, nu);
            CHECK((p * f - tf_shift(f, b, nu)).norm() < 1e-14);
            // unitary: P^H P = I
            CHECK((p.adjoint() * p - CMat::Identity(n, n)).norm() < 1e-13);
        }
}

TEST_CASE("composition law: pi(b,nu) pi(b',nu') = w^{-nu' b} pi(b+b', nu+nu')") {
    const int n = 8;
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu)
            for (int bp = 0; bp < n; ++bp)
                for (int np = 0; np < n; ++np) {
                    const CMat lhs = tf_shift_matrix(n, b, nu) * tf_shift_matrix(n, bp, np);
                    const CMat rhs = oracle::unit_phase(-static_cast<long long>(np) * b, n) *
                                     tf_shift_matrix(n, b + bp, nu + np);
                    REQUIRE((lhs - rhs).norm() < 1e-13);
                }
}

TEST_CASE("commutation phase: pi(z) pi(z') = w^{nu b' - nu' b} pi(z') pi(z)") {
    const int n = 6;
    for (int b = 0; b < n; ++b)
        for (int nu = 0; nu < n; ++nu)
            for (int bp = 0; bp < n; ++bp)
                for (int np = 0; np < n; ++np) {
                    const CMat lhs = tf_shift_matrix(n, b, nu) * tf_shift_matrix(n, bp, np);
                    const CMat rhs =
                        oracle::unit_phase(static_cast<long long>(nu) * bp -
                                               static_cast<long long>(np) * b,
                                           n) *
                        tf_shift_matrix(n, bp, np) * tf_shift_matrix(n, b, nu);
                    REQUIRE((lhs - rhs).norm() < 1e-13);
                }
}

TEST_CASE("stft matches the reference on even and odd lengths") {
    Rng rng(103);
    for (int n : {9, 16}) {
        const CVec f = rng.cvec(n);
        const CVec g = rng.cvec(n);
        CHECK(oracle::rel_err(stft(f, g), oracle::stft(f, g)) < 1e-13);
    }
}

TEST_CASE("stft samples are inner products against shifted windows") {
    Rng rng(104);
    const int n = 12;
    const CVec f = rng.cvec(n);
    const CVec g = rng.cvec(n);
    const CMat v = stft(f, g);
    for (int b = 0; b < n; b += 5)
        for (int nu = 0; nu < n; nu += 7) {
            const Complex want = tf_shift(g, b, nu).dot(f);  // <f, pi(b,nu) g>
            CHECK(std::abs(v(b, nu) - want) < 1e-12);
        }
}

TEST_CASE("stft energy: ||V_g f||^2 = N ||f||^2 ||g||^2") {
    Rng rng(105);
    const int n = 16;
    const CVec f = rng.cvec(n);
    const CVec g = rng.cvec(n);
    const double lhs = stft(f, g).squaredNorm();
    const double rhs = n * f.squaredNorm() * g.squaredNorm();
    CHECK(std::abs(lhs - rhs) < 1e-10 * rhs);
}

TEST_CASE("stft inversion through any window with <h,g> != 0") {
    Rng rng(106);
    const int n = 16;
    const CVec f = rng.cvec(n);
    const CVec g = gauss_window(n, 1.0);
    const CVec h = rng.cvec(n);
    const Complex hg = g.dot(h);  // <h, g>
    REQUIRE(std::abs(hg) > 1e-3);
    const CVec rec = stft_synthesis(stft(f, g), h) / (double(n) * hg);
    CHECK(oracle::rel_err(rec, f) < 1e-12);
}

TEST_CASE("stft covariance under TF shifts of the signal") {
    Rng rng(107);
    const int n = 10;
    const CVec f = rng.cvec(n);
    const CVec g = rng.cvec(n);
    const CMat base = stft(f, g);
    for (int u = 0; u < n; u += 3)
        for (int w = 0; w < n; w += 4) {
            const CMat shifted = stft(tf_shift(f, u, w), g);
            for (int b = 0; b < n; ++b)
                for (int nu = 0; nu < n; ++nu) {
                    const Complex want =
                        oracle::unit_phase(-static_cast<long long>(u) * (nu - w), n) *
                        base(imod(b - u, n), imod(nu - w, n));
                    REQUIRE(std::abs(shifted(b, nu) - want) < 1e-11);
                }
        }
}

TEST_CASE("gabor_analysis samples the full stft on the lattice") {
    Rng rng(108);
    const TFLattice lat(12, 3, 4);
    const CVec f = rng.cvec(12);
    const CVec g = rng.cvec(12);
    const CMat full = stft(f, g);
    const CMat c = gabor_analysis(f, g, lat);
    REQUIRE(c.rows() == lat.time_shifts());
    REQUIRE(c.cols() == lat.freq_shifts());
    for (int m = 0; m < c.rows(); ++m)
        for (int k = 0; k < c.cols(); ++k)
            CHECK(std::abs(c(m, k) - full(m * lat.a, k * lat.b)) < 1e-12);
}

TEST_CASE("gabor_synthesis equals full-grid synthesis of the padded coefficients") {
    Rng rng(109);
    const TFLattice lat(12, 2, 3);
    const CVec h = rng.cvec(12);
    CMat c(lat.time_shifts(), lat.freq_shifts());
    for (int m = 0; m < c.rows(); ++m)
        for (int k = 0; k < c.cols(); ++k) c(m, k) = rng.csym();
    CMat padded = CMat::Zero(12, 12);
    for (int m = 0; m < c.rows(); ++m)
        for (int k = 0; k < c.cols(); ++k) padded(m * lat.a, k * lat.b) = c(m, k);
    CHECK(oracle::rel_err(gabor_synthesis(c, h, lat), stft_synthesis(padded, h)) < 1e-12);
}

TEST_CASE("symplectic_dft matches the reference and is an involution") {
    Rng rng(110);
    for (int n : {6, 8}) {
        const CMat f = rng.cmat(n, n);
        const CMat s = symplectic_dft(f);
        CHECK(oracle::rel_err(s, oracle::symplectic_dft(f)) < 1e-12);
        CHECK(oracle::rel_err(symplectic_dft(s), f) < 1e-12);
    }
}

TEST_CASE("twisted convolution of point masses") {
    const int n = 4;
    for (int b1 = 0; b1 < n; ++b1)
        for (int n1 = 0; n1 < n; ++n1)
            for (int b2 = 0; b2 < n; ++b2)
                for (int n2 = 0; n2 < n; ++n2) {
                    CMat d1 = CMat::Zero(n, n), d2 = CMat::Zero(n, n);
                    d1(b1, n1) = 1.0;
                    d2(b2, n2) = 1.0;
                    // delta_{z2} nat delta_{z1} = w^{-b2 n1} delta_{z1+z2}
                    const CMat got = twisted_conv_ref(d2, d1);
                    CMat want = CMat::Zero(n, n);
                    want(imod(b1 + b2, n), imod(n1 + n2, n)) =
                        oracle::unit_phase(-static_cast<long long>(b2) * n1, n);
                    REQUIRE((got - want).norm() < 1e-14);
                }
}

TEST_CASE("twisted convolution: unit element and associativity") {
    Rng rng(111);
    const int n = 8;
    const CMat f = rng.cmat(n, n);
    const CMat g = rng.cmat(n, n);
    const CMat h = rng.cmat(n, n);
    CMat unit = CMat::Zero(n, n);
    unit(0, 0) = 1.0;
    CHECK(oracle::rel_err(twisted_conv_ref(unit, f), f) < 1e-13);
    CHECK(oracle::rel_err(twisted_conv_ref(f, unit), f) < 1e-13);
    const CMat left = twisted_conv_ref(twisted_conv_ref(f, g), h);
    const CMat right = twisted_conv_ref(f, twisted_conv_ref(g, h));
    CHECK(oracle::rel_err(left, right) < 1e-12);
    // noncommutative in general
    CHECK(oracle::rel_err(twisted_conv_ref(f, g), twisted_conv_ref(g, f)) > 1e-3);
}

TEST_CASE("fast twisted convolution agrees with the reference") {
    Rng rng(112);
    for (int n : {5, 8, 12}) {
        const CMat f = rng.cmat(n, n);
        const CMat g = rng.cmat(n, n);
        const CMat ref = twisted_conv_ref(f, g);
        CHECK(oracle::rel_err(twisted_conv_fast(f, g), ref) < 1e-12);
        CHECK(oracle::rel_err(twisted_conv(f, g), ref) < 1e-12);
    }
}

TEST_CASE("stft intertwines TF shifts with left twisted convolution") {
    Rng rng(113);
    const int n = 8;
    const CVec f = rng.cvec(n);
    const CVec g = rng.cvec(n);
    for (int u = 0; u < n; u += 3)
        for (int w = 0; w < n; w += 5) {
            CMat eta = CMat::Zero(n, n);
            eta(imod(u, n), imod(w, n)) = 1.0;
            const CMat lhs = stft(tf_shift(f, u, w), g);
            const CMat rhs = twisted_conv_ref(eta, stft(f, g));
            REQUIRE(oracle::rel_err(lhs, rhs) < 1e-12);
        }
}
