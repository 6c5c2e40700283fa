#include "kslab/fields.hpp"

#include <cmath>

namespace kslab {

double bump_value(std::span<const double> x, std::span<const double> center, double width) {
    double r2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        double d = (x[j] - center[j]) / width;
        r2 += d * d;
    }
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

GridField bump_field(const Box& box, std::vector<int> counts, std::vector<double> center,
                     double width) {
    return GridField::sample(
        [&center, width](std::span<const double> x) { return bump_value(x, center, width); },
        box, std::move(counts));
}

GridField random_smooth_field(std::mt19937_64& rng, const Box& box, std::vector<int> counts) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> freq(0.5, 3.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    const int n = box.dim();
    const int terms = 6;
    struct Term {
        double a;
        std::vector<double> w, phi;
    };
    std::vector<Term> series;
    for (int k = 1; k <= terms; ++k) {
        Term t;
        t.a = amp(rng) / (k * k);
        for (int j = 0; j < n; ++j) {
            t.w.push_back(freq(rng));
            t.phi.push_back(phase(rng));
        }
        series.push_back(std::move(t));
    }
    return GridField::sample(
        [&series](std::span<const double> x) {
            double v = 0.0;
            for (const auto& t : series) {
                double prod = t.a;
                for (std::size_t j = 0; j < x.size(); ++j)
                    prod *= std::cos(t.w[j] * x[j] + t.phi[j]);
                v += prod;
            }
            return v;
        },
        box, std::move(counts));
}

GridField random_band_limited_field(std::mt19937_64& rng, const Box& box,
                                    std::vector<int> counts, int max_mode, bool zero_mean) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = box.dim();
    struct Mode {
        std::vector<int> k;
        double a, b; // cos and sin amplitudes
    };
    std::vector<Mode> modes;
    std::vector<int> k(static_cast<std::size_t>(n), -max_mode);
    while (true) {
        double k2 = 0.0;
        for (int kj : k) k2 += kj * kj;
        // keep one representative per +-k pair; cos/sin already span both
        bool canonical = false;
        for (int kj : k) {
            if (kj > 0) { canonical = true; break; }
            if (kj < 0) break;
        }
        bool is_zero = k2 == 0.0;
        if (canonical || (is_zero && !zero_mean)) {
            Mode m;
            m.k = k;
            double decay = 1.0 / (1.0 + k2);
            m.a = gauss(rng) * decay;
            m.b = is_zero ? 0.0 : gauss(rng) * decay;
            modes.push_back(std::move(m));
        }
        int axis = n - 1;
        while (axis >= 0 && k[static_cast<std::size_t>(axis)] == max_mode) {
            k[static_cast<std::size_t>(axis)] = -max_mode;
            --axis;
        }
        if (axis < 0) break;
        ++k[static_cast<std::size_t>(axis)];
    }
    std::vector<double> lo(static_cast<std::size_t>(n)), len(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        lo[static_cast<std::size_t>(j)] = box.lower(j);
        len[static_cast<std::size_t>(j)] = box.length(j);
    }
    return GridField::sample(
        [&modes, &lo, &len](std::span<const double> x) {
            double v = 0.0;
            for (const auto& m : modes) {
                double phase = 0.0;
                for (std::size_t j = 0; j < x.size(); ++j)
                    phase += m.k[j] * (x[j] - lo[j]) / len[j];
                phase *= 2.0 * M_PI;
                v += m.a * std::cos(phase) + m.b * std::sin(phase);
            }
            return v;
        },
        box, std::move(counts), /*periodic=*/true);
}

} // namespace kslab
