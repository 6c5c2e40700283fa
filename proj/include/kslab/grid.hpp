#pragma once

#include "kslab/cubes.hpp"
#include "kslab/expr.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kslab {

/// Axis-aligned box in R^n with a_j < b_j per axis.
class Box {
public:
    Box(std::vector<double> lower, std::vector<double> upper);

    int dim() const { return static_cast<int>(lower_.size()); }
    double lower(int axis) const { return lower_[static_cast<std::size_t>(axis)]; }
    double upper(int axis) const { return upper_[static_cast<std::size_t>(axis)]; }
    double length(int axis) const { return upper(axis) - lower(axis); }
    double volume() const;

    bool operator==(const Box& other) const {
        return lower_ == other.lower_ && upper_ == other.upper_;
    }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Cell-centered samples of a scalar field on a uniform grid over a box.
/// Sample j along an axis sits at a + (j + 1/2) h with h = (b-a)/N.
/// Storage is row-major with the last axis fastest. Fields are treated as
/// extended by zero outside the box for restricted integrals and shifts.
class GridField {
public:
    GridField(Box box, std::vector<int> counts, bool periodic = false);

    static GridField sample(const FieldExpr& expr, Box box, std::vector<int> counts,
                            bool periodic = false);
    static GridField sample(const std::function<double(std::span<const double>)>& fn, Box box,
                            std::vector<int> counts, bool periodic = false);

    const Box& box() const { return box_; }
    const std::vector<int>& counts() const { return counts_; }
    int count(int axis) const { return counts_[static_cast<std::size_t>(axis)]; }
    int dim() const { return box_.dim(); }
    bool periodic() const { return periodic_; }

    double spacing(int axis) const {
        return box_.length(axis) / count(axis);
    }
    double cell_volume() const;
    std::size_t size() const { return samples_.size(); }

    double operator[](std::size_t flat) const { return samples_[flat]; }
    double& operator[](std::size_t flat) { return samples_[flat]; }
    std::span<const double> samples() const { return samples_; }

    std::size_t flat_index(std::span<const int> multi) const;
    std::vector<int> multi_index(std::size_t flat) const;
    std::vector<double> cell_center(std::size_t flat) const;

    /// Value at a lattice offset from a cell, honoring the periodic flag
    /// (wrap) or zero extension otherwise.
    double shifted_value(std::size_t flat, std::span<const int> offset) const;

    bool conformable(const GridField& other) const {
        return box_ == other.box_ && counts_ == other.counts_;
    }
    /// Throws shape_error unless conformable.
    void require_conformable(const GridField& other) const;

    double max_abs() const;

private:
    Box box_;
    std::vector<int> counts_;
    bool periodic_;
    std::vector<double> samples_;
    std::vector<std::size_t> strides_;
};

/// Deterministic pairwise reduction; bit-stable regardless of caller context.
double pairwise_sum(std::span<const double> values);

/// Composite midpoint quadrature over the whole box: sum(samples) * cell volume.
double integrate(const GridField& f);

/// (integral of |f|^p)^(1/p) for p in [1, inf); max |sample| for p = inf.
double lp_norm(const GridField& f, double p);

/// Integral of f restricted to cube (zero outside the box); each cell is
/// weighted by the exact per-axis interval-intersection volume.
double cube_integral(const GridField& f, const CubeSpec& cube);

GridField add(const GridField& f, const GridField& g);
GridField sub(const GridField& f, const GridField& g);
GridField scale(double c, const GridField& f);
GridField abs(const GridField& f);

/// CSV form: '# box=a1:b1,...;counts=N1,...;periodic=0|1' then one sample
/// per line in row-major order (last axis fastest).
void write_csv(const GridField& f, std::ostream& out);
GridField read_csv(std::istream& in);

/// Shortest-round-trip decimal formatting used by all CSV output.
std::string format_double(double v);

} // namespace kslab
