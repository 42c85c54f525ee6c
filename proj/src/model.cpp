#include "deltabound/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace deltabound {

void PhysicalSpec::validate() const {
    if (!std::isfinite(mass) || mass <= 0.0) {
        throw std::invalid_argument("mass must be positive and finite");
    }
    if (!std::isfinite(hbar) || hbar <= 0.0) {
        throw std::invalid_argument("hbar must be positive and finite");
    }
    if (wells.empty()) {
        throw std::invalid_argument("at least one well is required");
    }
    for (const auto& w : wells) {
        if (!std::isfinite(w.alpha) || !std::isfinite(w.x)) {
            throw std::invalid_argument("well strength and position must be finite");
        }
    }
}

DeltaPotential::DeltaPotential(std::vector<Well> wells) {
    if (wells.empty()) {
        throw std::invalid_argument("at least one well is required");
    }
    for (const auto& w : wells) {
        if (!std::isfinite(w.a) || !std::isfinite(w.x)) {
            throw std::invalid_argument("well strength and position must be finite");
        }
    }
    // Sorting on (x, a) fixes the summation order of merged strengths, which
    // keeps the result bit-identical under any permutation of the input.
    std::sort(wells.begin(), wells.end(), [](const Well& l, const Well& r) {
        return l.x != r.x ? l.x < r.x : l.a < r.a;
    });
    wells_.reserve(wells.size());
    for (const auto& w : wells) {
        if (!wells_.empty() && std::abs(w.x - wells_.back().x) <= kMergeTolerance) {
            wells_.back().a += w.a;
        } else {
            wells_.push_back(w);
        }
    }
}

double DeltaPotential::attractive_strength() const noexcept {
    double s = 0.0;
    for (const auto& w : wells_) s += std::max(w.a, 0.0);
    return s;
}

double DeltaPotential::total_abs_strength() const noexcept {
    double s = 0.0;
    for (const auto& w : wells_) s += std::abs(w.a);
    return s;
}

double DeltaPotential::min_separation() const noexcept {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < wells_.size(); ++i) {
        gap = std::min(gap, wells_[i].x - wells_[i - 1].x);
    }
    return gap;
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::none: break;
    }
    return "none";
}

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "none") return Parity::none;
    throw std::invalid_argument("unknown parity '" + s + "'");
}

BoundState::BoundState(double b, std::vector<double> coeffs, Parity parity)
    : b_(b), coeffs_(std::move(coeffs)), parity_(parity) {
    if (!std::isfinite(b_) || b_ <= 0.0) {
        throw std::invalid_argument("decay rate b must be positive and finite");
    }
    if (coeffs_.empty()) {
        throw std::invalid_argument("bound state needs at least one coefficient");
    }
    bool any_nonzero = false;
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("coefficients must be finite");
        any_nonzero = any_nonzero || c != 0.0;
    }
    if (!any_nonzero) {
        throw std::invalid_argument("coefficients must not all vanish");
    }
}

BoundState BoundState::scaled(double factor) const {
    std::vector<double> c(coeffs_.begin(), coeffs_.end());
    for (double& v : c) v *= factor;
    return BoundState(b_, std::move(c), parity_);
}

DeltaPotential to_natural(const PhysicalSpec& spec) {
    spec.validate();
    const double scale = 2.0 * spec.mass / (spec.hbar * spec.hbar);
    std::vector<Well> wells;
    wells.reserve(spec.wells.size());
    for (const auto& w : spec.wells) {
        wells.push_back({scale * w.alpha, w.x});
    }
    return DeltaPotential(std::move(wells));
}

double energy_physical(const BoundState& state, const PhysicalSpec& spec) {
    const double b = state.b();
    return -spec.hbar * spec.hbar * b * b / (2.0 * spec.mass);
}

}  // namespace deltabound
