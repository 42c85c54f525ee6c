#pragma once

#include <cmath>
#include <stdexcept>

namespace deltabound {

// Bisection on a sign-change bracket [lo, hi]. Stops once hi - lo <= tol and
// returns the midpoint, so the result is within tol/2 of a root. An exact zero
// at an endpoint or midpoint is returned directly.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bisect: tol must be positive");
    if (!(lo < hi)) throw std::invalid_argument("bisect: empty bracket");
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw std::invalid_argument("bisect: root not bracketed");
    }
    const bool lo_negative = std::signbit(f_lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at double resolution
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if (std::signbit(f_mid) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace deltabound
