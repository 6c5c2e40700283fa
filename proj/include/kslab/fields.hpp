#pragma once

#include "kslab/grid.hpp"

#include <random>

namespace kslab {

/// C-infinity bump supported on the open ball |x - center| < width around
/// `center`, scaled to value 1 at the center. Zero outside.
double bump_value(std::span<const double> x, std::span<const double> center, double width);

/// Bump sampled on a grid.
GridField bump_field(const Box& box, std::vector<int> counts, std::vector<double> center,
                     double width);

/// Smooth (C-infinity) pseudo-random field: a short cosine series with
/// decaying amplitudes. Deterministic given the generator state.
GridField random_smooth_field(std::mt19937_64& rng, const Box& box, std::vector<int> counts);

/// Periodic band-limited pseudo-random field: trigonometric modes with
/// integer frequencies |k_j| <= max_mode and decaying amplitudes.
GridField random_band_limited_field(std::mt19937_64& rng, const Box& box,
                                    std::vector<int> counts, int max_mode,
                                    bool zero_mean = false);

} // namespace kslab
