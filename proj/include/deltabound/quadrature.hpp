#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration over a piecewise interval.
// Breakpoints split the domain where the integrand has kinks; the interval
// with the largest error estimate is bisected until the summed estimate drops
// below max(abs_tol, rel_tol * |integral|) or the interval budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "deltabound/model.hpp"

namespace deltabound {

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;  // estimated absolute error
    std::size_t intervals = 0;
    bool converged = false;
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    std::size_t max_intervals = 20000;
};

namespace detail {

// Kronrod abscissae (descending), Kronrod weights, and the 7-point Gauss
// weights belonging to the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
    double lo, hi;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gauss_kronrod15(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T f_center = f(center);
    T kronrod = kWgk[7] * f_center;
    T gauss = kWg[3] * f_center;
    double abs_sum = kWgk[7] * std::abs(f_center);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const T left = f(center - dx);
        const T right = f(center + dx);
        kronrod += kWgk[j] * (left + right);
        abs_sum += kWgk[j] * (std::abs(left) + std::abs(right));
        if (j % 2 == 1) gauss += kWg[j / 2] * (left + right);
    }
    kronrod *= half;
    gauss *= half;
    // K and G can agree to the last bit; never claim better than rounding allows.
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(half) * abs_sum;
    return {lo, hi, kronrod, std::max(std::abs(kronrod - gauss), roundoff)};
}

}  // namespace detail

template <class T, class F>
QuadratureResult<T> integrate(const F& f, std::span<const double> breakpoints,
                              const QuadratureOptions& opts = {}) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate: need at least two breakpoints");
    }
    std::priority_queue<detail::Segment<T>> heap;
    T total{};
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] <= breakpoints[i + 1])) {
            throw std::invalid_argument("integrate: breakpoints must be non-decreasing");
        }
        if (breakpoints[i] == breakpoints[i + 1]) continue;
        auto seg = detail::gauss_kronrod15<T>(f, breakpoints[i], breakpoints[i + 1]);
        total += seg.value;
        total_error += seg.error;
        heap.push(seg);
    }
    QuadratureResult<T> result;
    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (!heap.empty() && total_error > target() && heap.size() < opts.max_intervals) {
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) break;  // cannot split further
        heap.pop();
        auto left = detail::gauss_kronrod15<T>(f, worst.lo, mid);
        auto right = detail::gauss_kronrod15<T>(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift from incremental updates.
    total = T{};
    total_error = 0.0;
    result.intervals = heap.size();
    while (!heap.empty()) {
        total += heap.top().value;
        total_error += heap.top().error;
        heap.pop();
    }
    result.value = total;
    result.error = total_error;
    result.converged = total_error <= target();
    return result;
}

}  // namespace deltabound
