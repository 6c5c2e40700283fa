#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kslab {

/// Closed axis-aligned cube: product of [center_j - edge/2, center_j + edge/2].
struct CubeSpec {
    std::vector<double> center;
    double edge = 0.0;

    double lower(int axis) const { return center[static_cast<std::size_t>(axis)] - edge / 2.0; }
    double upper(int axis) const { return center[static_cast<std::size_t>(axis)] + edge / 2.0; }
    int dim() const { return static_cast<int>(center.size()); }
    double volume() const;
};

/// Enumeration parameters for the cube family: dyadic-rational centers in
/// [-window, window]^dimension, dyadically shrinking edges per level.
struct CubeFamilyConfig {
    int dimension = 1;
    int window = 2; // M

    bool valid() const { return dimension >= 1 && window >= 1; }
};

/// Cantor anti-diagonal pairing (l, i) -> r, both 1-based.
/// r = (l+i-1)(l+i-2)/2 + i.
std::int64_t pairing(std::int64_t level, std::int64_t center_index);

/// Inverse of pairing: r -> (level, center_index).
std::pair<std::int64_t, std::int64_t> unpair(std::int64_t r);

/// j-th point (1-based) of the dyadic center enumeration.
/// n = 1: dyadic level 0 lists integers -M..M ascending; level m >= 1 lists
/// odd multiples k/2^m inside [-M, M] ascending. n > 1: tuples of 1-D indices
/// in anti-diagonal (total-sum) order, ties broken lexicographically.
std::vector<double> center(std::int64_t j, const CubeFamilyConfig& config);

/// Full side length at a given level: 2^(1-l) / sqrt(n).
double edge(std::int64_t level, int dimension);

/// r-th cube of the family: unpair r into (l, i), take center(i) and edge(l).
CubeSpec cube(std::int64_t r, const CubeFamilyConfig& config);

} // namespace kslab
