/*
 * Spreading-function calculus: every linear operator H on C^N is the
 * superposition H = sum_{b,nu} eta(b,nu) pi(b,nu) of TF shifts, and the
 * map between the kernel and the coefficient field eta is a per-diagonal
 * DFT pair. Operator composition becomes twisted convolution of
 * spreading functions, and the STFT intertwines operator application
 * with twisted convolution from the left.
 */
#pragma once

#include "tfop/types.hpp"

namespace tfop {

/**
 * Spreading function of a kernel:
 *   eta(b,nu) = 1/N sum_t kappa(t, t-b) w^{-nu t}.
 * With this normalization H = sum eta(b,nu) pi(b,nu) holds exactly and
 * ||H||_HS = sqrt(N) ||eta||_2.
 */
CMat spreading_from_kernel(const CMat& kernel);

/** Inverse map, kappa(t,s) = sum_nu eta(t-s, nu) w^{nu t}. */
CMat kernel_from_spreading(const CMat& eta);

/**
 * Action of an operator directly on STFT coefficients:
 * V_g(H f) = eta_H nat V_g f, a left twisted convolution.
 */
CMat apply_tf_domain(const CMat& eta, const CMat& stft_coef);

/** Spreading of a composition: eta(K2 K1) = eta(K2) nat eta(K1). */
CMat compose_spreading(const CMat& eta2, const CMat& eta1);

}  // namespace tfop
