/*
 * Twisted spline type (TST) operators: spreading functions of the form
 *   eta = comb(alpha) nat phi,
 * a twisted convolution of a weighted Dirac comb on a shift grid
 * (b1 Z) x (nu1 Z) with a prototype phi. Equivalently
 *   H_eta = sum_{k,l} alpha_{kl} pi(k b1, l nu1) H_phi.
 * When the shift grid is compatible with a Gabor lattice, such operators
 * collapse to a single Gabor multiplier (grid on the adjoint lattice) or
 * to a short sum of multipliers on lattice cosets (grid on a rational
 * refinement of the adjoint lattice).
 */
#pragma once

#include "tfop/gm.hpp"
#include "tfop/types.hpp"

namespace tfop {

struct TSTSpec {
    int n;                                            // signal length
    int b1;                                           // time step of the shift grid
    int nu1;                                          // frequency step of the shift grid
    std::vector<std::tuple<int, int, Complex>> alpha; // (k, l, coefficient)
    CMat phi;                                         // prototype spreading, N x N
};

/** eta(b,nu) = sum_{k,l} alpha_{kl} phi(b - k b1, nu - l nu1) w^{-k b1 (nu - l nu1)}. */
CMat tst_spreading(const TSTSpec& spec);

/** Kernel of sum_{k,l} alpha_{kl} pi(k b1, l nu1) H_phi, assembled shift by shift. */
CMat tst_operator(const TSTSpec& spec);

struct TstGm {
    CVec gamma;       // synthesis window sum_{k,l} alpha_{kl} pi(k b1, l nu1) h
    CMat mask;        // multiplier mask of the prototype
    double residual;  // relative distance of phi from exact multiplier form
};

/**
 * Reduction to a single Gabor multiplier GM(mask; g, gamma), valid when
 * (b1, nu1) lies on the adjoint lattice of lat (throws otherwise). The
 * prototype must be (near) multiplier form: its distance is returned as
 * `residual`, and with strict = true a residual above tol raises
 * StructureError instead.
 */
TstGm tst_to_single_gm(const TSTSpec& spec, const CVec& g, const CVec& h, const TFLattice& lat,
                       bool strict = true, double tol = 1e-8);

struct TstCosetGm {
    int time_residue;   // i: lattice points with m = i mod time_modulus
    int time_modulus;   // q
    int freq_residue;   // j: lattice points with n = j mod freq_modulus
    int freq_modulus;   // p
    CVec gamma;         // synthesis window of this coset
    CMat mask;          // base mask restricted to the coset (zero elsewhere)
};

struct TstGmSum {
    std::vector<TstCosetGm> terms;
    double residual;
};

/**
 * Reduction to a sum of at most p*q coset multipliers for shift grids on
 * the rational refinement b1 = N/(p b), nu1 = N/(q a) of the adjoint
 * lattice (throws if the steps do not match exactly). Shifting the
 * prototype multiplier through the grid twists each lattice atom by
 *   w^{l nu1 m a  -  n b k b1},
 * which depends only on (m mod q, n mod p); collecting lattice points by
 * that residue pair gives synthesis windows
 *   gamma_{ij} = sum_{k,l} alpha_{kl} w^{l nu1 i a - j b k b1} pi(k b1, l nu1) h
 * and the coset-restricted copies of the prototype mask. The sum of the
 * returned multipliers equals tst_operator(spec) up to the prototype
 * residual.
 */
TstGmSum tst_to_gm_sum(const TSTSpec& spec, const CVec& g, const CVec& h, const TFLattice& lat,
                       int p, int q, bool strict = true, double tol = 1e-8);

}  // namespace tfop
