#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kslab/cubes.hpp"
#include "kslab/errors.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace kslab;

TEST_CASE("pairing anti-diagonal order") {
    CHECK(pairing(1, 1) == 1);
    CHECK(pairing(2, 1) == 2);
    CHECK(pairing(1, 2) == 3);
    CHECK(pairing(3, 1) == 4);
    CHECK(pairing(2, 2) == 5);
    CHECK(pairing(1, 3) == 6);
}

TEST_CASE("unpair inverts pairing up to 100x100") {
    for (std::int64_t l = 1; l <= 100; ++l) {
        for (std::int64_t i = 1; i <= 100; ++i) {
            auto [ll, ii] = unpair(pairing(l, i));
            CHECK(ll == l);
            CHECK(ii == i);
        }
    }
}

TEST_CASE("pairing image is a bijection on 1..10^4") {
    std::set<std::int64_t> seen;
    for (std::int64_t r = 1; r <= 10000; ++r) {
        auto [l, i] = unpair(r);
        CHECK(pairing(l, i) == r);
        CHECK(seen.insert(pairing(l, i)).second);
    }
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 10000);
}

TEST_CASE("1-D center enumeration, M=1") {
    CubeFamilyConfig cfg{1, 1};
    CHECK(center(1, cfg)[0] == -1.0);
    CHECK(center(2, cfg)[0] == 0.0);
    CHECK(center(3, cfg)[0] == 1.0);
    CHECK(center(4, cfg)[0] == -0.5);
    CHECK(center(5, cfg)[0] == 0.5);
    CHECK(center(6, cfg)[0] == -0.75);
    CHECK(center(7, cfg)[0] == -0.25);
    CHECK(center(8, cfg)[0] == 0.25);
    CHECK(center(9, cfg)[0] == 0.75);
    CHECK(center(10, cfg)[0] == -0.875); // level 3 starts
}

TEST_CASE("n-D centers lift the 1-D sequence anti-diagonally") {
    CubeFamilyConfig cfg{2, 1};
    auto c1 = center(1, cfg);
    CHECK(c1[0] == -1.0);
    CHECK(c1[1] == -1.0);
    // sum=3 diagonal, lexicographic: (1,2) then (2,1)
    auto c2 = center(2, cfg);
    CHECK(c2[0] == -1.0);
    CHECK(c2[1] == 0.0);
    auto c3 = center(3, cfg);
    CHECK(c3[0] == 0.0);
    CHECK(c3[1] == -1.0);
}

TEST_CASE("edge formula 2^(1-l)/sqrt(n)") {
    CHECK(edge(1, 1) == 1.0);
    CHECK(edge(2, 4) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(edge(3, 1) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("cube composes unpair, center and edge") {
    CubeFamilyConfig cfg{1, 1};
    CubeSpec c1 = cube(1, cfg);
    CHECK(c1.center[0] == -1.0);
    CHECK(c1.edge == 1.0);
    CubeSpec c2 = cube(2, cfg); // (l,i) = (2,1)
    CHECK(c2.center[0] == -1.0);
    CHECK(c2.edge == 0.5);
    CubeSpec c3 = cube(3, cfg); // (l,i) = (1,2)
    CHECK(c3.center[0] == 0.0);
    CHECK(c3.edge == 1.0);
}

TEST_CASE("cube volumes never exceed 1") {
    for (int n : {1, 2, 3, 5}) {
        for (std::int64_t l = 1; l <= 12; ++l) {
            double v = std::pow(edge(l, n), n);
            CHECK(v <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("density surrogate: levels 1..3 all reach random points (n=1, M=2)") {
    CubeFamilyConfig cfg{1, 2};
    const std::int64_t R = 5000;
    std::mt19937_64 rng(20250810);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        double x = dist(rng);
        bool found[4] = {false, false, false, false};
        for (std::int64_t r = 1; r <= R; ++r) {
            auto [l, i] = unpair(r);
            if (l > 3) continue;
            CubeSpec c = cube(r, cfg);
            if (x >= c.lower(0) && x <= c.upper(0)) found[l] = true;
            if (found[1] && found[2] && found[3]) break;
        }
        CHECK(found[1]);
        CHECK(found[2]);
        CHECK(found[3]);
    }
}

TEST_CASE("density surrogate in 2-D needs more depth for deeper levels") {
    CubeFamilyConfig cfg{2, 2};
    const std::int64_t R = 15000;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        double x[2] = {dist(rng), dist(rng)};
        bool found[3] = {false, false, false};
        for (std::int64_t r = 1; r <= R; ++r) {
            auto [l, i] = unpair(r);
            if (l > 2) continue;
            CubeSpec c = cube(r, cfg);
            bool inside = true;
            for (int a = 0; a < 2; ++a)
                inside = inside && x[a] >= c.lower(a) && x[a] <= c.upper(a);
            if (inside) found[l] = true;
            if (found[1] && found[2]) break;
        }
        CHECK(found[1]);
        CHECK(found[2]);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(pairing(0, 1), config_error);
    CHECK_THROWS_AS(unpair(0), config_error);
    CHECK_THROWS_AS(edge(0, 1), config_error);
    CHECK_THROWS_AS(center(1, CubeFamilyConfig{0, 1}), config_error);
}
