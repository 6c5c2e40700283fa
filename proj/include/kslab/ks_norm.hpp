#pragma once

#include "kslab/cubes.hpp"
#include "kslab/grid.hpp"

#include <cmath>
#include <iosfwd>
#include <string>

namespace kslab {

/// Parameters of the truncated KS^p series: cube family, geometric weights
/// tau_r = 2^-r (positive, unit sum), and truncation depth R.
struct KSConfig {
    CubeFamilyConfig family;
    int depth = 40; // R

    static KSConfig defaults(int dimension) { return {{dimension, 2}, 40}; }

    double weight(std::int64_t r) const { return std::ldexp(1.0, static_cast<int>(-r)); }
};

/// A computed norm value plus its truncation-error certificate.
struct NormReport {
    double value = 0.0;
    double bound = 0.0; // |true series value - value| <= bound (heuristic for sup)
    int depth = 0;
    double p = 0.0;               // infinity for the sup norm
    bool heuristic_bound = false; // sup-norm tail bound is not a certificate
    bool under_resolved = false;  // some enumerated cube edge < 2 * max grid spacing
};

/// 'value,bound,R,p' CSV row (no header).
std::string norm_report_csv(const NormReport& report);

/// Truncated KS^p norm, p in [1, inf):
/// value = (sum_{r=1..R} tau_r |integral of f over B_r|^p)^(1/p).
/// The bound certifies the discarded tail via |F_r(f)| <= max|f| (all cube
/// volumes are <= 1) and sum_{r>R} tau_r = 2^-R.
NormReport ks_norm(const GridField& f, double p, const KSConfig& ks);

/// Truncated KS^infinity seminorm: max_{r<=R} |integral of f over B_r|.
/// The reported bound (max|f| times the largest tail-cube volume) is only a
/// heuristic: the sup over the tail never shrinks with R because level-1
/// cubes keep appearing at every depth.
NormReport ks_sup_norm(const GridField& f, const KSConfig& ks);

/// Truncated KS^2 inner product: sum_r tau_r F_r(f) F_r(g).
double ks_inner(const GridField& f, const GridField& g, const KSConfig& ks);

} // namespace kslab
