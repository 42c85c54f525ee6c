#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "deltabound/model.hpp"
#include "oracles.hpp"

using namespace deltabound;

TEST_CASE("to_natural maps alpha to 2 m alpha / hbar^2") {
    const auto unit = to_natural({1.0, 1.0, {{1.0, 0.0}}});
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].a == 2.0);
    CHECK(unit[0].x == 0.0);

    const auto half_mass = to_natural({0.5, 1.0, {{1.0, 0.0}}});
    CHECK(half_mass[0].a == 1.0);
}

TEST_CASE("coincident wells merge by adding strengths") {
    const auto pot = to_natural({1.0, 1.0, {{1.0, 0.0}, {2.0, 0.0}}});
    REQUIRE(pot.size() == 1);
    CHECK(pot[0].a == 6.0);

    const DeltaPotential near({{1.0, 0.0}, {1.0, 5e-13}, {1.0, 1.0}});
    CHECK(near.size() == 2);
    const DeltaPotential apart({{1.0, 0.0}, {1.0, 1e-9}});
    CHECK(apart.size() == 2);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(to_natural({1.0, 1.0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(to_natural({0.0, 1.0, {{1.0, 0.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(to_natural({1.0, -1.0, {{1.0, 0.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(to_natural({1.0, 1.0, {{NAN, 0.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(to_natural({1.0, 1.0, {{1.0, INFINITY}}}), std::invalid_argument);
    CHECK_THROWS_AS(DeltaPotential({}), std::invalid_argument);
    CHECK_THROWS_AS(BoundState(0.0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(BoundState(1.0, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("repulsive wells are accepted") {
    const auto pot = to_natural({1.0, 1.0, {{-1.0, 0.0}}});
    CHECK(pot[0].a == -2.0);
    CHECK(pot.attractive_strength() == 0.0);
}

TEST_CASE("energy_physical inverts the b definition") {
    const PhysicalSpec unit{1.0, 1.0, {{1.0, 0.0}}};
    CHECK(energy_physical(BoundState(1.0, {1.0}), unit) == -0.5);
    CHECK(energy_physical(BoundState(2.0, {1.0}), unit) == -2.0);
    CHECK(BoundState(2.0, {1.0}).energy() == -2.0);
}

TEST_CASE("property: to_natural is homogeneous in alpha") {
    for (int trial = 0; trial < 100; ++trial) {
        PhysicalSpec spec{oracles::uniform(0.1, 5.0), oracles::uniform(0.1, 3.0), {}};
        const std::size_t n = oracles::uniform_int(1, 5);
        for (std::size_t i = 0; i < n; ++i) {
            spec.wells.push_back({oracles::uniform(-3.0, 3.0), static_cast<double>(i) + oracles::uniform(0.0, 0.5)});
        }
        const double s = oracles::uniform(0.1, 10.0);
        auto scaled = spec;
        for (auto& w : scaled.wells) w.alpha *= s;
        const auto base = to_natural(spec);
        const auto up = to_natural(scaled);
        REQUIRE(base.size() == up.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(up[i].a == doctest::Approx(s * base[i].a).epsilon(1e-14));
            CHECK(up[i].x == base[i].x);
        }
    }
}

TEST_CASE("property: merging is order independent") {
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Well> wells;
        const std::size_t n = oracles::uniform_int(1, 7);
        for (std::size_t i = 0; i < n; ++i) {
            // small integer positions so coincidences are common
            wells.push_back({oracles::uniform(-2.0, 4.0), static_cast<double>(oracles::uniform_int(0, 3))});
        }
        const DeltaPotential reference(wells);
        std::shuffle(wells.begin(), wells.end(), oracles::rng());
        CHECK(DeltaPotential(wells) == reference);
        for (std::size_t i = 1; i < reference.size(); ++i) {
            CHECK(reference[i].x > reference[i - 1].x);
        }
    }
}

TEST_CASE("property: single well recovers E = -m alpha^2 / (2 hbar^2)") {
    for (int trial = 0; trial < 200; ++trial) {
        const double m = oracles::uniform(0.01, 100.0);
        const double hbar = oracles::uniform(0.01, 10.0);
        const double alpha = oracles::uniform(0.01, 50.0);
        const PhysicalSpec spec{m, hbar, {{alpha, 0.0}}};
        const auto pot = to_natural(spec);
        const BoundState state(0.5 * pot[0].a, {1.0});
        const double expected = -m * alpha * alpha / (2.0 * hbar * hbar);
        CHECK(energy_physical(state, spec) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("parity names round trip") {
    for (auto p : {Parity::even, Parity::odd, Parity::none}) {
        CHECK(parity_from_string(to_string(p)) == p);
    }
    CHECK_THROWS(parity_from_string("sideways"));
}
