#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "deltabound/ndelta.hpp"
#include "deltabound/periodic.hpp"
#include "oracles.hpp"

using namespace deltabound;
using namespace deltabound::periodic;

namespace {

// Self-consistency at a lattice site summed term by term:
//   1 = (a/2b) sum_n exp(iKnd) exp(-b|n|d).
double lattice_sum_residual(double b, double K, double a, double d) {
    double s = 1.0;
    for (int n = 1; n < 100000; ++n) {
        const double term = std::exp(-b * d * n);
        s += 2.0 * std::cos(K * d * n) * term;
        if (term < 1e-18) break;
    }
    return a / (2.0 * b) * s - 1.0;
}

DeltaPotential chain(std::size_t n, double a, double d) {
    std::vector<Well> wells;
    for (std::size_t i = 0; i < n; ++i) wells.push_back({a, d * static_cast<double>(i)});
    return DeltaPotential(wells);
}

}  // namespace

TEST_CASE("dispersion residual limits") {
    // b -> 0 at the zone edge: -2 + a d / 2
    CHECK(dispersion_residual(1e-7, M_PI, 2.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(dispersion_residual(1e-7, M_PI / 2.0, 3.0, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(dispersion_residual(oracles::kLatticeTopA2D1, 0.0, 2.0, 1.0)) < 1e-14);
}

TEST_CASE("closed form matches the direct lattice sum") {
    for (int trial = 0; trial < 50; ++trial) {
        const double a = oracles::uniform(0.5, 5.0);
        const double d = oracles::uniform(0.3, 4.0);
        const double K = oracles::uniform(0.0, std::numbers::pi / d);
        if (auto b = band_root(K, a, d)) {
            CHECK(std::abs(lattice_sum_residual(*b, K, a, d)) < 1e-9);
        }
    }
}

TEST_CASE("band top for a = 2, d = 1") {
    const auto edges = band_edges(2.0, 1.0);
    REQUIRE(edges.b_top);
    CHECK(*edges.b_top == doctest::Approx(oracles::kLatticeTopA2D1).epsilon(1e-12));
    CHECK(*edges.b_top > 1.0);
    CHECK_FALSE(edges.b_bottom);  // a d = 2 < 4: zone edge is in the continuum
}

TEST_CASE("zone-edge state appears at a d = 4") {
    CHECK_FALSE(band_edges(2.0, 1.9).b_bottom);
    const auto edges = band_edges(2.0, 2.1);
    REQUIRE(edges.b_bottom);
    CHECK(*edges.b_bottom < *edges.b_top);
    // tangency located by bisection on the small-b residual
    const double threshold = oracles::bisection(
        [](double d) { return dispersion_residual(1e-9, std::numbers::pi / d, 2.0, d); }, 1.0, 3.0);
    CHECK(threshold == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("isolated-well limit") {
    for (double a : {0.5, 2.0, 6.0}) {
        const double d = 40.0 / a;
        const auto edges = band_edges(a, d);
        REQUIRE(edges.b_top);
        REQUIRE(edges.b_bottom);
        CHECK(std::abs(*edges.b_top - 0.5 * a) < 1e-6);
        CHECK(std::abs(*edges.b_bottom - 0.5 * a) < 1e-6);
        CHECK(*edges.b_top - *edges.b_bottom <= 1e-6);
    }
}

TEST_CASE("band root decreases with K") {
    for (double d : {0.5, 1.0, 2.5, 5.0}) {
        const auto points = band_sweep(2.0, d, 20);
        for (std::size_t i = 1; i < points.size(); ++i) {
            CHECK(points[i].K > points[i - 1].K);
            CHECK(points[i].b <= points[i - 1].b);
        }
    }
}

TEST_CASE("finite chains fill the band") {
    const double a = 2.0, d = 1.0;
    const auto edges = band_edges(a, d);
    const double lower = edges.b_bottom.value_or(0.0);
    std::size_t last_count = 0;
    double last_gap = INFINITY;
    for (std::size_t n : {5u, 11u, 21u}) {
        const auto states = ndelta::scan_bound_states(chain(n, a, d)).states;
        CHECK(states.size() > last_count);
        last_count = states.size();
        for (const auto& s : states) {
            CHECK(s.b() >= lower - 1e-3);
            CHECK(s.b() <= *edges.b_top + 1e-3);
        }
        const double gap = *edges.b_top - states.front().b();
        CHECK(gap < last_gap);
        last_gap = gap;
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(band_edges(2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(band_edges(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(band_sweep(2.0, 1.0, 0), std::invalid_argument);
}
