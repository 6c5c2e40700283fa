#include "kslab/cubes.hpp"

#include "kslab/errors.hpp"

#include <cmath>

namespace kslab {

double CubeSpec::volume() const {
    double v = 1.0;
    for (int j = 0; j < dim(); ++j) v *= edge;
    return v;
}

std::int64_t pairing(std::int64_t level, std::int64_t center_index) {
    if (level < 1 || center_index < 1) throw config_error("pairing arguments must be >= 1");
    std::int64_t s = level + center_index - 1;
    return s * (s - 1) / 2 + center_index;
}

std::pair<std::int64_t, std::int64_t> unpair(std::int64_t r) {
    if (r < 1) throw config_error("cube index must be >= 1");
    // s is the anti-diagonal: largest s with s(s-1)/2 < r.
    auto s = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(r - 1) + 1.0) - 1.0) / 2.0);
    while (s * (s + 1) / 2 >= r) --s;
    while ((s + 1) * (s + 2) / 2 < r) ++s;
    std::int64_t i = r - s * (s + 1) / 2;
    std::int64_t l = s + 2 - i;
    return {l, i};
}

namespace {

// Size of dyadic level m of the 1-D center enumeration on [-M, M].
std::int64_t level_size_1d(std::int64_t m, std::int64_t M) {
    return m == 0 ? 2 * M + 1 : M << m; // 2M+1 integers, then M*2^m odd multiples
}

double center_1d(std::int64_t j, std::int64_t M) {
    std::int64_t m = 0;
    std::int64_t idx = j - 1; // 0-based within the concatenation
    while (idx >= level_size_1d(m, M)) {
        idx -= level_size_1d(m, M);
        ++m;
    }
    if (m == 0) return static_cast<double>(-M + idx);
    // odd multiples k/2^m, k ascending from -(M*2^m - 1) in steps of 2
    std::int64_t k = -(M << m) + 1 + 2 * idx;
    return static_cast<double>(k) / static_cast<double>(std::int64_t{1} << m);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// q-th tuple (1-based) of positive integers of length n in anti-diagonal
// (total-sum) order with lexicographic tie-break.
std::vector<std::int64_t> unrank_tuple(std::int64_t q, int n) {
    std::int64_t s = n; // current anti-diagonal: tuple sum
    std::int64_t rank = q - 1;
    while (true) {
        std::int64_t count = binomial(s - 1, n - 1); // compositions of s into n positive parts
        if (rank < count) break;
        rank -= count;
        ++s;
    }
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(n));
    std::int64_t remaining = s;
    for (int pos = 0; pos < n - 1; ++pos) {
        std::int64_t parts_left = n - pos - 1;
        for (std::int64_t v = 1;; ++v) {
            std::int64_t count = binomial(remaining - v - 1, parts_left - 1);
            if (rank < count) {
                tuple[static_cast<std::size_t>(pos)] = v;
                remaining -= v;
                break;
            }
            rank -= count;
        }
    }
    tuple[static_cast<std::size_t>(n - 1)] = remaining;
    return tuple;
}

} // namespace

std::vector<double> center(std::int64_t j, const CubeFamilyConfig& config) {
    if (!config.valid()) throw config_error("invalid cube family config");
    if (j < 1) throw config_error("center index must be >= 1");
    const std::int64_t M = config.window;
    if (config.dimension == 1) return {center_1d(j, M)};
    std::vector<std::int64_t> tuple = unrank_tuple(j, config.dimension);
    std::vector<double> point(tuple.size());
    for (std::size_t a = 0; a < tuple.size(); ++a) point[a] = center_1d(tuple[a], M);
    return point;
}

double edge(std::int64_t level, int dimension) {
    if (level < 1 || dimension < 1) throw config_error("edge arguments must be >= 1");
    return std::ldexp(1.0, static_cast<int>(1 - level)) / std::sqrt(static_cast<double>(dimension));
}

CubeSpec cube(std::int64_t r, const CubeFamilyConfig& config) {
    auto [l, i] = unpair(r);
    return CubeSpec{center(i, config), edge(l, config.dimension)};
}

} // namespace kslab
