/*
 * Time-frequency representations on C^N: TF shifts, the short-time
 * Fourier transform, lattice (Gabor) analysis/synthesis, the symplectic
 * Fourier transform, and twisted convolution.
 *
 * Conventions (fixed throughout the library, w = exp(2*pi*i/N)):
 *
 *   pi(b,nu) f (t) = w^{nu t} f(t-b)            modulation after translation
 *   pi(b,nu) pi(b',nu') = w^{-nu' b} pi(b+b',nu+nu')
 *   V_g f (b,nu) = sum_t f(t) conj(g(t-b)) w^{-nu t} = <f, pi(b,nu) g>
 *   (F nat G)(b,nu) = sum_{b',nu'} F(b',nu') G(b-b',nu-nu') w^{-b'(nu-nu')}
 *
 * N x N time-frequency arrays are indexed (row = lag b, col = modulation nu).
 */
#pragma once

#include "tfop/types.hpp"

namespace tfop {

/** Time-frequency shift pi(b,nu) applied to f. Unitary; indices mod N. */
CVec tf_shift(const CVec& f, int b, int nu);

/** Matrix of pi(b,nu): entries w^{nu t} at (t, t-b mod N). */
CMat tf_shift_matrix(int n, int b, int nu);

/**
 * Full short-time Fourier transform V_g f as an N x N array.
 * Satisfies ||V_g f||^2 = N ||f||^2 ||g||^2 and, for <h,g> != 0,
 * f = 1/(N <h,g>) sum_{b,nu} V_g f(b,nu) pi(b,nu) h.
 */
CMat stft(const CVec& f, const CVec& g);

/** Unscaled synthesis sum_{b,nu} F(b,nu) pi(b,nu) h over the full grid. */
CVec stft_synthesis(const CMat& coef, const CVec& h);

/** Lattice samples c(m,n) = V_g f(ma, nb) as an M x K array. */
CMat gabor_analysis(const CVec& f, const CVec& g, const TFLattice& lat);

/** Lattice synthesis sum_{m,n} c(m,n) pi(ma,nb) h. */
CVec gabor_synthesis(const CMat& coef, const CVec& h, const TFLattice& lat);

/**
 * Symplectic discrete Fourier transform
 *   (Fs F)(t,xi) = 1/N sum_{b,nu} F(b,nu) w^{-(b xi - t nu)},
 * an involution: applying it twice returns the input.
 */
CMat symplectic_dft(const CMat& f);

/**
 * Twisted convolution F nat G. Associative and noncommutative, with unit
 * delta_{(0,0)}; it is the composition law for operator spreading
 * functions. Dispatches to a reference double loop for N <= 64 and to a
 * DFT-accelerated path for larger N (the two agree to rounding).
 */
CMat twisted_conv(const CMat& f, const CMat& g);

/** Reference O(N^4) twisted convolution (kept callable for cross-checks). */
CMat twisted_conv_ref(const CMat& f, const CMat& g);

/** DFT-accelerated twisted convolution, O(N^3). */
CMat twisted_conv_fast(const CMat& f, const CMat& g);

}  // namespace tfop
