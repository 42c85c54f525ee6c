#include "deltabound/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "deltabound/roots.hpp"

namespace deltabound::analytic {

namespace {

void check_residual_args(double b, double a, double L) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
    if (a == 0.0 || !std::isfinite(a)) throw std::invalid_argument("a must be finite and nonzero");
}

}  // namespace

std::optional<BoundState> single_bound_state(double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("a must be finite");
    if (a <= 0.0) return std::nullopt;
    return BoundState(0.5 * a, {1.0}, Parity::even);
}

// expm1 keeps both residuals accurate near b = 0, where the odd condition
// degenerates to 2b(1/a - L).
double even_residual(double b, double a, double L) {
    check_residual_args(b, a, L);
    return std::expm1(-2.0 * b * L) + 2.0 - 2.0 * b / a;
}

double odd_residual(double b, double a, double L) {
    check_residual_args(b, a, L);
    return std::expm1(-2.0 * b * L) + 2.0 * b / a;
}

bool odd_state_exists(double a, double L) {
    return a > 0.0 && a * L > 1.0;
}

std::vector<BoundState> solve_double(double a, double L, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("L must be positive and finite");
    if (!std::isfinite(a)) throw std::invalid_argument("a must be finite");
    std::vector<BoundState> states;
    if (a <= 0.0) return states;

    // even: residual is exp(-aL) > 0 at b = a/2 and exp(-2aL) - 1 < 0 at b = a.
    // Once exp(-aL) underflows the root is a/2 to working precision.
    auto even = [&](double b) { return even_residual(b, a, L); };
    const double half = 0.5 * a;
    const double b_even = even(half) > 0.0 ? bisect(even, half, a, tol) : half;
    states.emplace_back(b_even, std::vector<double>{1.0, 1.0}, Parity::even);

    if (odd_state_exists(a, L)) {
        auto odd = [&](double b) { return odd_residual(b, a, L); };
        const double eps = std::min(tol, 0.25 * half);
        // A non-negative residual at eps means the root sits in (0, eps].
        const double b_odd = odd(eps) < 0.0 ? bisect(odd, eps, half, tol) : 0.5 * eps;
        states.emplace_back(b_odd, std::vector<double>{-1.0, 1.0}, Parity::odd);
    }
    return states;
}

}  // namespace deltabound::analytic
