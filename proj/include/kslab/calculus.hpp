#pragma once

#include "kslab/grid.hpp"
#include "kslab/ks_norm.hpp"

#include <span>
#include <vector>

namespace kslab {

/// Multi-index alpha = (alpha_1..alpha_n) of non-negative integers.
using MultiIndex = std::vector<int>;

int order(const MultiIndex& alpha);

/// All alpha with |alpha| <= k in graded lexicographic order;
/// count is C(n+k, k).
std::vector<MultiIndex> multi_indices(int k, int n);

/// Compactly supported smoothing kernel on a lattice matching a target grid:
/// C_eps * exp(1/(|x|^2 - eps^2)) inside |x| < eps, zero outside, with C_eps
/// normalizing the lattice quadrature sum to exactly 1.
class MollifierSpec {
public:
    static MollifierSpec for_grid(double epsilon, const GridField& like);

    double epsilon() const { return epsilon_; }
    double normalization() const { return normalization_; }
    int dim() const { return static_cast<int>(spacing_.size()); }

    /// Normalized kernel value at a point.
    double kernel(std::span<const double> x) const;

    /// Unnormalized kernel exp(1/(|x|^2 - eps^2)), zero for |x| >= eps.
    static double raw_kernel(std::span<const double> x, double epsilon);

    /// Lattice offsets with nonzero weight and their quadrature weights
    /// (normalized kernel value times cell volume; weights sum to 1).
    const std::vector<std::vector<int>>& offsets() const { return offsets_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    MollifierSpec() = default;
    double epsilon_ = 0.0;
    double normalization_ = 0.0;
    std::vector<double> spacing_;
    std::vector<std::vector<int>> offsets_;
    std::vector<double> weights_;
};

/// Discrete convolution with the mollifier kernel on f's own lattice.
/// Out-of-box values are zero (or wrap for periodic fields).
GridField mollify(const GridField& f, double epsilon);

/// (f(x + h v) - f(x)) / h with lattice-exact shifts; h*v must be an integer
/// multiple of the grid spacing along every axis.
GridField diff_quotient(const GridField& f, std::span<const double> v, double h);

struct CauchyRow {
    double h_coarse;
    double h_fine;
    double ks_distance; // KS^p norm of the difference of quotients
};

struct StrongDerivativeResult {
    GridField estimate; // difference quotient at the smallest h
    std::vector<CauchyRow> diagnostics;
};

/// Difference-quotient limit diagnostic: quotients along a decreasing h
/// schedule plus KS^p Cauchy distances between consecutive quotients.
StrongDerivativeResult strong_derivative(const GridField& f, std::span<const double> v, double p,
                                         std::span<const double> h_schedule, const KSConfig& ks);

struct PairingResiduals {
    double l2;  // plain L^2 quadrature pairing
    double ks2; // KS^2 inner-product pairing
};

/// Integration-by-parts residual |<f, D_v phi> + <g, phi>| under both
/// pairings; phi must vanish in a 3-cell boundary margin.
PairingResiduals weak_derivative_residual(const GridField& f, const GridField& g,
                                          std::span<const double> v, const GridField& phi,
                                          const KSConfig& ks);

/// |integral of H * D phi + phi(0)| in one dimension, H the unit step at 0
/// sampled on the grid and phi(0) supplied from the analytic expression.
double heaviside_delta_residual(const GridField& phi, double phi_at_zero);

/// Mixed partial via per-axis 2nd-order central differences (one-sided
/// 2nd-order closures at the boundary), applied alpha_j times per axis.
GridField fd_partial(const GridField& f, const MultiIndex& alpha);

enum class DerivEngine { FiniteDifference, Spectral };

/// Sobolev-style norm: p-sum of KS^p norms of D^alpha f over |alpha| <= k;
/// max of KS^inf seminorms for p = inf. Truncation bounds combine by the
/// same p-sum.
NormReport ws_norm(const GridField& f, int k, double p, const KSConfig& ks,
                   DerivEngine engine = DerivEngine::FiniteDifference);

} // namespace kslab
