#include "kslab/grid.hpp"

#include "kslab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace kslab {

Box::Box(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size())
        throw config_error("box corners must be non-empty and the same dimension");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j]))
            throw config_error("box requires lower < upper on every axis");
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]))
            throw config_error("box corners must be finite");
    }
}

double Box::volume() const {
    double v = 1.0;
    for (int j = 0; j < dim(); ++j) v *= length(j);
    return v;
}

GridField::GridField(Box box, std::vector<int> counts, bool periodic)
    : box_(std::move(box)), counts_(std::move(counts)), periodic_(periodic) {
    if (static_cast<int>(counts_.size()) != box_.dim())
        throw config_error("counts dimension does not match box dimension");
    std::size_t total = 1;
    for (int n : counts_) {
        if (n < 2) throw config_error("need at least 2 samples per axis");
        total *= static_cast<std::size_t>(n);
    }
    samples_.assign(total, 0.0);
    strides_.assign(counts_.size(), 1);
    for (int a = static_cast<int>(counts_.size()) - 2; a >= 0; --a)
        strides_[static_cast<std::size_t>(a)] =
            strides_[static_cast<std::size_t>(a) + 1] *
            static_cast<std::size_t>(counts_[static_cast<std::size_t>(a) + 1]);
}

GridField GridField::sample(const FieldExpr& expr, Box box, std::vector<int> counts,
                            bool periodic) {
    return sample(
        [&expr](std::span<const double> x) { return expr.eval(x); }, std::move(box),
        std::move(counts), periodic);
}

GridField GridField::sample(const std::function<double(std::span<const double>)>& fn, Box box,
                            std::vector<int> counts, bool periodic) {
    GridField f(std::move(box), std::move(counts), periodic);
    std::vector<double> x(static_cast<std::size_t>(f.dim()));
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        auto center = f.cell_center(flat);
        try {
            f.samples_[flat] = fn(center);
        } catch (const eval_error& e) {
            std::string where;
            for (std::size_t j = 0; j < center.size(); ++j)
                where += (j ? "," : "(") + format_double(center[j]);
            throw eval_error(std::string(e.what()) + " at cell center " + where + ")");
        }
        if (!std::isfinite(f.samples_[flat]))
            throw eval_error("non-finite sample value");
    }
    return f;
}

double GridField::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim(); ++a) v *= spacing(a);
    return v;
}

std::size_t GridField::flat_index(std::span<const int> multi) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < strides_.size(); ++a)
        flat += static_cast<std::size_t>(multi[a]) * strides_[a];
    return flat;
}

std::vector<int> GridField::multi_index(std::size_t flat) const {
    std::vector<int> multi(strides_.size());
    for (std::size_t a = 0; a < strides_.size(); ++a) {
        multi[a] = static_cast<int>(flat / strides_[a]);
        flat %= strides_[a];
    }
    return multi;
}

std::vector<double> GridField::cell_center(std::size_t flat) const {
    auto multi = multi_index(flat);
    std::vector<double> x(multi.size());
    for (std::size_t a = 0; a < multi.size(); ++a)
        x[a] = box_.lower(static_cast<int>(a)) +
               (multi[a] + 0.5) * spacing(static_cast<int>(a));
    return x;
}

double GridField::shifted_value(std::size_t flat, std::span<const int> offset) const {
    auto multi = multi_index(flat);
    for (std::size_t a = 0; a < multi.size(); ++a) {
        int i = multi[a] + offset[a];
        int n = counts_[a];
        if (periodic_) {
            i %= n;
            if (i < 0) i += n;
        } else if (i < 0 || i >= n) {
            return 0.0;
        }
        multi[a] = i;
    }
    return samples_[flat_index(multi)];
}

void GridField::require_conformable(const GridField& other) const {
    if (!conformable(other))
        throw shape_error("fields are not conformable (box or counts differ)");
}

double GridField::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::fabs(v));
    return m;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double integrate(const GridField& f) {
    return pairwise_sum(f.samples()) * f.cell_volume();
}

double lp_norm(const GridField& f, double p) {
    if (!(p >= 1.0)) throw config_error("lp_norm requires p >= 1");
    if (std::isinf(p)) return f.max_abs();
    std::vector<double> powered(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        powered[i] = std::pow(std::fabs(f[i]), p);
    double integral = pairwise_sum(powered) * f.cell_volume();
    return std::pow(integral, 1.0 / p);
}

namespace {

struct AxisOverlap {
    int first = 0;                // first cell with nonzero overlap
    std::vector<double> weights;  // per-cell intersection lengths
};

AxisOverlap axis_overlap(double a, double h, int n, double lo, double hi) {
    AxisOverlap out;
    double lo_idx = (lo - a) / h;
    double hi_idx = (hi - a) / h;
    int first = std::max(0, static_cast<int>(std::floor(lo_idx)));
    int last = std::min(n - 1, static_cast<int>(std::ceil(hi_idx)) - 1);
    if (first > last) return out;
    out.first = first;
    out.weights.reserve(static_cast<std::size_t>(last - first + 1));
    for (int i = first; i <= last; ++i) {
        double cell_lo = a + i * h;
        double cell_hi = a + (i + 1) * h;
        double w = std::min(hi, cell_hi) - std::max(lo, cell_lo);
        out.weights.push_back(std::max(0.0, w));
    }
    return out;
}

} // namespace

double cube_integral(const GridField& f, const CubeSpec& cube) {
    if (cube.dim() != f.dim())
        throw shape_error("cube dimension does not match field dimension");
    const int n = f.dim();
    std::vector<AxisOverlap> overlaps(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        overlaps[static_cast<std::size_t>(a)] = axis_overlap(
            f.box().lower(a), f.spacing(a), f.count(a), cube.lower(a), cube.upper(a));
        if (overlaps[static_cast<std::size_t>(a)].weights.empty()) return 0.0;
    }
    // Odometer over all axes but the last; the innermost axis is contiguous.
    const auto& inner = overlaps[static_cast<std::size_t>(n - 1)];
    std::vector<std::size_t> outer_sizes;
    std::size_t outer_total = 1;
    for (int a = 0; a < n - 1; ++a) {
        outer_sizes.push_back(overlaps[static_cast<std::size_t>(a)].weights.size());
        outer_total *= outer_sizes.back();
    }
    std::vector<double> terms;
    terms.reserve(outer_total);
    std::vector<int> multi(static_cast<std::size_t>(n), 0);
    for (std::size_t oi = 0; oi < outer_total; ++oi) {
        std::size_t rest = oi;
        double outer_weight = 1.0;
        for (int a = n - 2; a >= 0; --a) {
            std::size_t sz = outer_sizes[static_cast<std::size_t>(a)];
            std::size_t k = rest % sz;
            rest /= sz;
            const auto& ov = overlaps[static_cast<std::size_t>(a)];
            multi[static_cast<std::size_t>(a)] = ov.first + static_cast<int>(k);
            outer_weight *= ov.weights[k];
        }
        multi[static_cast<std::size_t>(n - 1)] = inner.first;
        std::size_t base = f.flat_index(multi);
        std::vector<double> row(inner.weights.size());
        for (std::size_t k = 0; k < inner.weights.size(); ++k)
            row[k] = f[base + k] * inner.weights[k];
        terms.push_back(outer_weight * pairwise_sum(row));
    }
    return pairwise_sum(terms);
}

namespace {

template <typename Op>
GridField elementwise(const GridField& f, const GridField& g, Op op) {
    f.require_conformable(g);
    GridField out(f.box(), f.counts(), f.periodic());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i], g[i]);
    return out;
}

} // namespace

GridField add(const GridField& f, const GridField& g) {
    return elementwise(f, g, [](double a, double b) { return a + b; });
}

GridField sub(const GridField& f, const GridField& g) {
    return elementwise(f, g, [](double a, double b) { return a - b; });
}

GridField scale(double c, const GridField& f) {
    GridField out(f.box(), f.counts(), f.periodic());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
    return out;
}

GridField abs(const GridField& f) {
    GridField out(f.box(), f.counts(), f.periodic());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::fabs(f[i]);
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const GridField& f, std::ostream& out) {
    out << "# box=";
    for (int a = 0; a < f.dim(); ++a) {
        if (a) out << ',';
        out << format_double(f.box().lower(a)) << ':' << format_double(f.box().upper(a));
    }
    out << ";counts=";
    for (int a = 0; a < f.dim(); ++a) {
        if (a) out << ',';
        out << f.count(a);
    }
    out << ";periodic=" << (f.periodic() ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) out << format_double(f[i]) << '\n';
}

GridField read_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# box=", 0) != 0)
        throw io_error("missing GridField CSV header");
    auto semicolon1 = header.find(";counts=");
    auto semicolon2 = header.find(";periodic=");
    if (semicolon1 == std::string::npos || semicolon2 == std::string::npos)
        throw io_error("malformed GridField CSV header");
    std::string box_part = header.substr(6, semicolon1 - 6);
    std::string counts_part = header.substr(semicolon1 + 8, semicolon2 - semicolon1 - 8);
    std::string periodic_part = header.substr(semicolon2 + 10);

    std::vector<double> lo, hi;
    std::stringstream bs(box_part);
    std::string token;
    while (std::getline(bs, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos) throw io_error("malformed box range");
        lo.push_back(std::stod(token.substr(0, colon)));
        hi.push_back(std::stod(token.substr(colon + 1)));
    }
    std::vector<int> counts;
    std::stringstream cs(counts_part);
    while (std::getline(cs, token, ',')) counts.push_back(std::stoi(token));
    bool periodic = periodic_part == "1";

    GridField f(Box(std::move(lo), std::move(hi)), std::move(counts), periodic);
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::string line;
        if (!std::getline(in, line)) throw io_error("GridField CSV truncated");
        f[i] = std::stod(line);
    }
    return f;
}

} // namespace kslab
