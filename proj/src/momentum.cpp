#include "deltabound/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "deltabound/ndelta.hpp"
#include "deltabound/quadrature.hpp"

namespace deltabound::momentum {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Half-width of the integration window beyond the outermost well, in units of 1/b.
constexpr double kTruncation = 40.0;

Complex phase_sum(const std::vector<MomentumProfile::Term>& terms, double k, double shift) {
    Complex s{0.0, 0.0};
    for (const auto& t : terms) {
        const double arg = k * (t.x - shift);
        s += t.weight * Complex(std::cos(arg), std::sin(arg));
    }
    return s;
}

}  // namespace

MomentumProfile::MomentumProfile(double b, std::vector<Term> terms) : b_(b), terms_(std::move(terms)) {
    if (!(b_ > 0.0) || !std::isfinite(b_)) throw std::invalid_argument("b must be positive and finite");
    if (terms_.empty()) throw std::invalid_argument("momentum profile needs at least one term");
    for (const auto& t : terms_) {
        if (!std::isfinite(t.weight) || !std::isfinite(t.x)) {
            throw std::invalid_argument("momentum profile terms must be finite");
        }
    }
}

MomentumProfile MomentumProfile::of(const BoundState& state, const DeltaPotential& pot) {
    const auto c = state.coeffs();
    if (c.size() != pot.size()) throw std::invalid_argument("state does not match potential");
    std::vector<Term> terms;
    terms.reserve(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        terms.push_back({pot[j].a * c[j] * kInvSqrt2Pi, pot[j].x});
    }
    return MomentumProfile(state.b(), std::move(terms));
}

Complex MomentumProfile::operator()(double k) const {
    return phase_sum(terms_, k, 0.0) / (k * k + b_ * b_);
}

double MomentumProfile::envelope() const noexcept {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.weight);
    return s;
}

Complex phi_k(const BoundState& state, const DeltaPotential& pot, double k) {
    return MomentumProfile::of(state, pot)(k);
}

Complex numerical_ft(const BoundState& state, const DeltaPotential& pot, double k, double quad_tol) {
    if (!(quad_tol > 0.0)) throw std::invalid_argument("quad_tol must be positive");
    const double b = state.b();
    std::vector<double> breaks;
    breaks.reserve(pot.size() + 2);
    breaks.push_back(pot.min_x() - kTruncation / b);
    for (const auto& w : pot.wells()) breaks.push_back(w.x);
    breaks.push_back(pot.max_x() + kTruncation / b);

    auto integrand = [&](double x) {
        const double phi = ndelta::reconstruct(state, pot, x);
        return Complex(std::cos(k * x), std::sin(k * x)) * phi;
    };
    QuadratureOptions opts;
    opts.abs_tol = 0.1 * quad_tol / kInvSqrt2Pi;
    const auto r = integrate<Complex>(integrand, breaks, opts);
    const double achieved = r.error * kInvSqrt2Pi;
    if (!r.converged || achieved > quad_tol) {
        std::ostringstream os;
        os << "Fourier quadrature did not converge: estimated error " << achieved
           << " exceeds " << quad_tol;
        throw QuadratureError(os.str(), achieved);
    }
    return r.value * kInvSqrt2Pi;
}

ParsevalNorms parseval_check(const BoundState& state, const DeltaPotential& pot) {
    const auto profile = MomentumProfile::of(state, pot);
    const double b = state.b();
    const double position = ndelta::norm_squared(state, pot);

    // k = b tan(theta) maps the line onto (-pi/2, pi/2); the Lorentzian
    // squared then contributes cos^2(theta) / b^3 and the integrand stays bounded.
    auto integrand = [&](double theta) {
        const double k = b * std::tan(theta);
        const double c = std::cos(theta);
        return std::norm(phase_sum(profile.terms(), k, 0.0)) * c * c / (b * b * b);
    };
    const double half_pi = 0.5 * std::numbers::pi;
    const double breaks[] = {-half_pi, 0.0, half_pi};
    QuadratureOptions opts;
    opts.abs_tol = 1e-13 * std::max(position, 1e-300);
    opts.rel_tol = 1e-12;
    opts.max_intervals = 100000;
    const auto r = integrate<double>(integrand, breaks, opts);
    if (!r.converged) {
        std::ostringstream os;
        os << "momentum-space norm quadrature did not converge: estimated error " << r.error;
        throw QuadratureError(os.str(), r.error);
    }
    return {position, r.value};
}

Parity parity_of_profile(const MomentumProfile& profile, double tol) {
    const auto& terms = profile.terms();
    double lo = terms.front().x, hi = terms.front().x;
    for (const auto& t : terms) {
        lo = std::min(lo, t.x);
        hi = std::max(hi, t.x);
    }
    const double center = 0.5 * (lo + hi);
    const double b = profile.b();

    std::vector<double> ks;
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) ks.push_back(f * b);
    if (hi > lo) {
        const double inv_span = 1.0 / (hi - lo);
        for (double f : {0.3, 1.0, 1.7, 3.1, 5.3}) ks.push_back(f * inv_span);
    }

    auto centred = [&](double k) { return phase_sum(terms, k, center) / (k * k + b * b); };
    double scale = 0.0;
    for (double k : ks) scale = std::max({scale, std::abs(centred(k)), std::abs(centred(-k))});
    const double thr = tol * scale;
    bool even = true, odd = true;
    for (double k : ks) {
        const Complex plus = centred(k);
        const Complex minus = centred(-k);
        even = even && std::abs(minus - plus) <= thr;
        odd = odd && std::abs(minus + plus) <= thr;
    }
    if (even && !odd) return Parity::even;
    if (odd && !even) return Parity::odd;
    return Parity::none;
}

}  // namespace deltabound::momentum
