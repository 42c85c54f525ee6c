#pragma once

// Lowest (E < 0) band of an infinite chain of equal wells a with spacing d.
//
// Imposing phi(x + d) = exp(iKd) phi(x) on the exponential superposition
// phi(x) = sum_n (a/2b) c_n exp(-b|x - nd|) gives c_n = exp(iKnd) c_0, and
// self-consistency at x = 0 sums the geometric series to
//   cos(Kd) = cosh(bd) - (a/2b) sinh(bd).

#include <cstddef>
#include <optional>
#include <vector>

namespace deltabound::periodic {

struct BandPoint {
    double K;  // Bloch wavenumber in [0, pi/d]
    double b;
    double d;
    double a;
    double energy() const noexcept { return -0.5 * b * b; }
};

/// cos(Kd) - [cosh(bd) - (a/2b) sinh(bd)].
double dispersion_residual(double b, double K, double a, double d);

/// Root b > 0 of the dispersion at Bloch number K, or nothing when that part
/// of the band has merged into the continuum.
std::optional<double> band_root(double K, double a, double d, double tol = 1e-12);

struct BandEdges {
    std::optional<double> b_top;     // K = 0, deepest state of the band
    std::optional<double> b_bottom;  // K = pi/d, exists only for ad > 4
};

BandEdges band_edges(double a, double d, double tol = 1e-12);

/// K swept uniformly over [0, pi/d]; K values without a bound root are skipped.
std::vector<BandPoint> band_sweep(double a, double d, std::size_t samples, double tol = 1e-12);

}  // namespace deltabound::periodic
