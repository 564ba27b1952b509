/*
 * Seeded operator generators for the numerical experiments. Operators are
 * specified by their spreading function; values are real uniform draws on
 * [-0.5, 0.5) in a fixed row-major scan order, so a (kind, parameters,
 * seed) triple pins the operator exactly.
 */
#pragma once

#include "tfop/rng.hpp"
#include "tfop/types.hpp"

namespace tfop {

/**
 * Spreading supported on a centered box: lags and modulations run over
 * centered windows of the given extents (extent w covers offsets
 * -floor((w-1)/2) .. w - 1 - floor((w-1)/2)).
 */
CMat random_rect_spreading(Rng& rng, int n, int lag_extent, int mod_extent);

/**
 * Perturbed time-invariant operator: a random convolution (spreading on
 * the zero-modulation row, all lags) plus noise_scale times random draws
 * on a centered (lag_extent x mod_extent) box.
 */
CMat random_perturbed_lti_spreading(Rng& rng, int n, int lag_extent, int mod_extent,
                                    double noise_scale);

}  // namespace tfop
