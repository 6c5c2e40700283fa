#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kslab/errors.hpp"
#include "kslab/fields.hpp"
#include "kslab/ks_norm.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace kslab;

namespace {

// Composite midpoint quadrature with explicit splits at known
// discontinuities; each smooth piece gets its share of the point budget.
double split_midpoint(const std::function<double(double)>& f, double lo, double hi,
                      const std::vector<double>& splits, int total_points) {
    std::vector<double> cuts = {lo, hi};
    for (double s : splits)
        if (s > lo && s < hi) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
        double a = cuts[piece], b = cuts[piece + 1];
        int pts = std::max(64, static_cast<int>(total_points * (b - a) / (hi - lo)));
        double h = (b - a) / pts;
        double piece_sum = 0.0;
        for (int i = 0; i < pts; ++i) piece_sum += f(a + (i + 0.5) * h);
        sum += piece_sum * h;
    }
    return sum;
}

GridField indicator_half_interval() {
    // f = 1 on [-1/2, 1/2], 0 elsewhere on [-1, 1]; N chosen so +-1/2 are
    // cell boundaries, making the sampled field exact per cell.
    return GridField::sample(
        [](std::span<const double> x) { return std::fabs(x[0]) <= 0.5 ? 1.0 : 0.0; },
        Box({-1.0}, {1.0}), {512});
}

} // namespace

TEST_CASE("zero field has zero value and zero bound") {
    GridField zero(Box({-1.0}, {1.0}), {32});
    KSConfig ks = KSConfig::defaults(1);
    NormReport r = ks_norm(zero, 2.0, ks);
    CHECK(r.value == 0.0);
    CHECK(r.bound == 0.0);
    CHECK(ks_sup_norm(zero, ks).value == 0.0);
}

TEST_CASE("absolute homogeneity of the truncated series") {
    std::mt19937_64 rng(3);
    GridField f = random_smooth_field(rng, Box({-1.0}, {1.0}), {128});
    KSConfig ks = KSConfig::defaults(1);
    CHECK(ks_norm(scale(2.0, f), 2.0, ks).value == 2.0 * ks_norm(f, 2.0, ks).value);
    for (double p : {1.0, 3.0}) {
        double lhs = ks_norm(scale(-2.0, f), p, ks).value;
        double rhs = 2.0 * ks_norm(f, p, ks).value;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("independent per-cube quadrature oracle, indicator field") {
    GridField f = indicator_half_interval();
    KSConfig ks{{1, 1}, 30};
    NormReport got = ks_norm(f, 2.0, ks);

    auto indicator = [](double x) { return std::fabs(x) <= 0.5 ? 1.0 : 0.0; };
    double series = 0.0;
    for (int r = 1; r <= ks.depth; ++r) {
        CubeSpec c = cube(r, ks.family);
        double lo = std::max(c.lower(0), -1.0);
        double hi = std::min(c.upper(0), 1.0);
        double integral =
            lo < hi ? split_midpoint(indicator, lo, hi, {-0.5, 0.5}, 100000) : 0.0;
        series += ks.weight(r) * integral * integral;
    }
    double want = std::sqrt(series);
    CHECK(std::fabs(got.value - want) <= 1e-10);
}

TEST_CASE("sup norm of the unit field on [-2,2]") {
    GridField one = GridField::sample(FieldExpr::parse("1", 1), Box({-2.0}, {2.0}), {256});
    for (int R : {1, 5, 40}) {
        KSConfig ks{{1, 1}, R};
        NormReport r = ks_sup_norm(one, ks);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.heuristic_bound);
    }
}

TEST_CASE("sup norm dominates every member functional") {
    std::mt19937_64 rng(5);
    GridField f = random_smooth_field(rng, Box({-1.0}, {1.0}), {128});
    KSConfig ks = KSConfig::defaults(1);
    double sup = ks_sup_norm(f, ks).value;
    CHECK(sup >= std::fabs(cube_integral(f, cube(1, ks.family))));
}

TEST_CASE("inner product identities") {
    std::mt19937_64 rng(9);
    Box box({-1.0}, {1.0});
    GridField f = random_smooth_field(rng, box, {128});
    GridField g = random_smooth_field(rng, box, {128});
    GridField zero(box, {128});
    KSConfig ks = KSConfig::defaults(1);

    double nf = ks_norm(f, 2.0, ks).value;
    CHECK(ks_inner(f, f, ks) == doctest::Approx(nf * nf).epsilon(1e-12));
    CHECK(ks_inner(f, zero, ks) == 0.0);
    CHECK(ks_inner(f, g, ks) == ks_inner(g, f, ks));

    GridField other(box, {64});
    CHECK_THROWS_AS(ks_inner(f, other, ks), shape_error);
}

TEST_CASE("norm axioms on random pairs") {
    std::mt19937_64 rng(31);
    Box box({-1.0}, {1.0});
    KSConfig ks = KSConfig::defaults(1);
    for (int trial = 0; trial < 100; ++trial) {
        GridField f = random_smooth_field(rng, box, {64});
        GridField g = random_smooth_field(rng, box, {64});
        for (double p : {1.0, 2.0}) {
            double fg = ks_norm(add(f, g), p, ks).value;
            CHECK(fg <= ks_norm(f, p, ks).value + ks_norm(g, p, ks).value + 1e-12);
        }
    }
}

TEST_CASE("KS norm is dominated by the Lp norm (embedding direction)") {
    std::mt19937_64 rng(57);
    Box box({-1.0}, {1.0});
    KSConfig ks = KSConfig::defaults(1);
    for (int trial = 0; trial < 50; ++trial) {
        GridField f = random_smooth_field(rng, box, {512});
        CHECK(ks_norm(f, 2.0, ks).value <= lp_norm(f, 2.0) + 1e-9);
    }
}

TEST_CASE("KS^p dominated by KS^inf at equal depth") {
    std::mt19937_64 rng(71);
    Box box({-1.0}, {1.0});
    KSConfig ks = KSConfig::defaults(1);
    for (int trial = 0; trial < 20; ++trial) {
        GridField f = random_smooth_field(rng, box, {128});
        double sup = ks_sup_norm(f, ks).value;
        for (double p : {1.0, 2.0, 4.0})
            CHECK(ks_norm(f, p, ks).value <= sup + 1e-12);
    }
}

TEST_CASE("value is non-decreasing in depth R") {
    std::mt19937_64 rng(83);
    GridField f = random_smooth_field(rng, Box({-1.0}, {1.0}), {128});
    double prev = 0.0;
    for (int R : {5, 10, 20, 40, 80}) {
        KSConfig ks{{1, 2}, R};
        double v = ks_norm(f, 2.0, ks).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("truncation certificate covers the R=40 vs R=80 gap") {
    std::mt19937_64 rng(97);
    Box box({-1.0}, {1.0});
    for (int trial = 0; trial < 20; ++trial) {
        GridField f = random_smooth_field(rng, box, {128});
        NormReport at40 = ks_norm(f, 2.0, KSConfig{{1, 2}, 40});
        NormReport at80 = ks_norm(f, 2.0, KSConfig{{1, 2}, 80});
        CHECK(at80.value - at40.value <= at40.bound);
        CHECK(at80.value >= at40.value);
    }
}

TEST_CASE("oscillation shrinks the KS norm while the L2 norm stays put") {
    Box box({0.0}, {1.0});
    KSConfig ks = KSConfig::defaults(1);
    double first = 0.0, prev = 0.0;
    for (int n : {1, 2, 4, 8, 16}) {
        GridField f = GridField::sample(
            FieldExpr::parse("sin(2*pi*" + std::to_string(n) + "*x1)", 1), box, {1024});
        CHECK(lp_norm(f, 2.0) == doctest::Approx(0.70710678).epsilon(1e-4));
        double v = ks_norm(f, 2.0, ks).value;
        if (n == 1) {
            first = v;
        } else {
            CHECK(v < prev);
        }
        prev = v;
    }
    CHECK(prev / first < 0.2);
}

TEST_CASE("norm report serializes to value,bound,R,p") {
    NormReport r{1.5, 0.25, 40, 2.0, false, false};
    CHECK(norm_report_csv(r) == "1.5,0.25,40,2");
    NormReport s{1.0, 0.5, 10, std::numeric_limits<double>::infinity(), true, false};
    CHECK(norm_report_csv(s) == "1,0.5,10,inf");
}
