#include "deltabound/periodic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "deltabound/roots.hpp"

namespace deltabound::periodic {

namespace {

void check_lattice(double a, double d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("lattice spacing d must be positive");
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("strength a must be positive");
}

// 2 exp(-y) [cosh(y) - (c/y) sinh(y) - v] with y = bd, c = ad/2. Same sign as
// -dispersion_residual, but free of overflow at large y and of cancellation
// at small y.
double scaled_gap(double y, double c, double v) {
    return 1.0 + std::exp(-2.0 * y) + (c / y) * std::expm1(-2.0 * y) - 2.0 * v * std::exp(-y);
}

}  // namespace

double dispersion_residual(double b, double K, double a, double d) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    if (!(d > 0.0)) throw std::invalid_argument("d must be positive");
    return std::cos(K * d) - (std::cosh(b * d) - a / (2.0 * b) * std::sinh(b * d));
}

// The right-hand side g(y) = cosh(y) - (c/y) sinh(y) starts at 1 - c, dips
// (only for c > 3) while still below -1, and then grows without bound. Any
// level v in [-1, 1] is therefore crossed at most once, on the rising branch,
// and the gap is negative below the root and positive above it.
std::optional<double> band_root(double K, double a, double d, double tol) {
    check_lattice(a, d);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const double v = std::cos(K * d);
    const double c = 0.5 * a * d;
    const double y_tol = tol * d;
    auto gap = [&](double y) { return scaled_gap(y, c, v); };

    double y_lo = std::min(y_tol, 1e-3 * c);
    if (gap(y_lo) >= 0.0) return std::nullopt;
    double y_hi = std::max(2.0 * c, 1.0);
    while (gap(y_hi) <= 0.0) y_hi *= 2.0;
    const double y = bisect(gap, y_lo, y_hi, y_tol);
    return y / d;
}

BandEdges band_edges(double a, double d, double tol) {
    return {band_root(0.0, a, d, tol), band_root(std::numbers::pi / d, a, d, tol)};
}

std::vector<BandPoint> band_sweep(double a, double d, std::size_t samples, double tol) {
    check_lattice(a, d);
    if (samples == 0) throw std::invalid_argument("need at least one K sample");
    const double k_max = std::numbers::pi / d;
    std::vector<BandPoint> points;
    for (std::size_t i = 0; i < samples; ++i) {
        const double K = samples == 1 ? 0.0 : k_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (auto b = band_root(K, a, d, tol)) points.push_back({K, *b, d, a});
    }
    return points;
}

}  // namespace deltabound::periodic
