#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "deltabound/quadrature.hpp"
#include "deltabound/roots.hpp"

using namespace deltabound;

TEST_CASE("Gauss-Kronrod 15 is exact for polynomials up to degree 22") {
    // Kronrod part is exact to degree 22; the Gauss part only to 13, so the
    // error estimate vanishes below that and not above.
    for (int deg = 0; deg <= 22; ++deg) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const auto seg = detail::gauss_kronrod15<double>(f, -1.0, 2.0);
        const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(seg.value == doctest::Approx(exact).epsilon(1e-13));
        if (deg <= 13) CHECK(seg.error <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("adaptive integration handles kinks at breakpoints") {
    auto f = [](double x) { return std::exp(-std::abs(x - 0.3)); };
    const double breaks[] = {-10.0, 0.3, 10.0};
    const auto r = integrate<double>(f, breaks, {1e-13, 0.0, 1000});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 - std::exp(-9.7) - std::exp(-10.3)).epsilon(1e-12));
}

TEST_CASE("complex integrand") {
    auto f = [](double x) { return std::complex<double>(std::cos(3.0 * x), std::sin(3.0 * x)); };
    const double breaks[] = {0.0, std::numbers::pi};
    const auto r = integrate<std::complex<double>>(f, breaks);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.value.imag() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("non-convergence is reported") {
    auto f = [](double x) { return std::sin(1.0 / x); };
    const double breaks[] = {1e-6, 1.0};
    const auto r = integrate<double>(f, breaks, {1e-15, 0.0, 10});
    CHECK_FALSE(r.converged);
    CHECK(r.error > 0.0);
}

TEST_CASE("bisect finds bracketed roots and rejects bad brackets") {
    auto f = [](double x) { return x * x - 2.0; };
    CHECK(bisect(f, 0.0, 2.0, 1e-14) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(bisect(f, 2.0, 3.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(bisect(f, 0.0, 2.0, 0.0), std::invalid_argument);
    CHECK(bisect([](double x) { return x; }, 0.0, 1.0, 1e-12) == 0.0);
}
