/*
 * Window construction and Gabor frame machinery.
 */
#pragma once

#include "tfop/types.hpp"

namespace tfop {

/**
 * Periodized sampled Gaussian, centered at 0 and l2-normalized.
 *
 *   g(t) ~ sum_{r=-5}^{5} exp(-pi * width^2 * (tc + r*N)^2 / N),
 *
 * where tc is the centered representative of t in [-N/2, N/2). The width
 * parameter acts as a reciprocal standard deviation: width = 1 gives the
 * self-dual proportioned envelope exp(-pi t^2 / N), larger widths are
 * narrower in time. Summing over the centered representative keeps the
 * result exactly even under t -> -t mod N. Throws on width <= 0.
 */
CVec gauss_window(int n, double width);

/**
 * Gabor frame operator S f = sum_{lambda in lattice} <f, g_lambda> g_lambda
 * with g_lambda = pi(ma, nb) g. Assembled from the closed form
 *
 *   S(t,s) = K * [t == s mod N/b] * sum_m g(t - ma) conj(g(s - ma)),
 *
 * which is Hermitian and banded on the cosets of (N/b)Z_N.
 */
CMat frame_operator(const CVec& g, const TFLattice& lat);

struct FrameInfo {
    double lower;      // smallest eigenvalue of S
    double upper;      // largest eigenvalue of S
    bool is_frame;     // condition number within the inversion cutoff
    double condition;  // upper / lower (inf if lower <= 0)
};

/** Frame bounds of (g, lattice) from the eigenvalues of the frame operator. */
FrameInfo frame_info(const CVec& g, const TFLattice& lat);

/**
 * Canonical dual window h = S^{-1} g, computed through a Hermitian
 * eigendecomposition of the frame operator. Requires a*b <= N; throws
 * FrameError (carrying the extreme eigenvalues) when the frame operator
 * is singular or has condition number beyond 1e12.
 */
CVec dual_window(const CVec& g, const TFLattice& lat);

}  // namespace tfop
