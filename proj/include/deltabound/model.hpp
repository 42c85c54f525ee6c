#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltabound {

// Positions closer than this (absolute) are treated as one well.
inline constexpr double kMergeTolerance = 1e-12;

/// Raised when a solver cannot produce a trustworthy result from valid input.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integration did not reach the requested tolerance.
class QuadratureError : public SolverError {
public:
    QuadratureError(const std::string& what, double achieved)
        : SolverError(what), achieved_error_(achieved) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

struct PhysicalWell {
    double alpha = 0.0;  // energy * length
    double x = 0.0;      // length
};

/// Physical inputs before unit reduction: H = -hbar^2/(2m) d^2/dx^2 - sum_j alpha_j delta(x - x_j).
struct PhysicalSpec {
    double mass = 1.0;
    double hbar = 1.0;
    std::vector<PhysicalWell> wells;

    // Throws std::invalid_argument when mass/hbar are not positive, the
    // well list is empty, or any value is not finite.
    void validate() const;
};

/// One delta well in natural units (hbar = m = 1): strength a (1/length) at x.
struct Well {
    double a = 0.0;
    double x = 0.0;

    bool operator==(const Well&) const = default;
};

/// Natural-units potential -(1/2) sum_j a_j delta(x - x_j) in the reduced
/// equation phi'' + sum_j a_j delta(x - x_j) phi - b^2 phi = 0.
///
/// Wells are kept sorted by position with coincident positions merged, so two
/// inputs that differ only by ordering compare equal.
class DeltaPotential {
public:
    explicit DeltaPotential(std::vector<Well> wells);

    std::span<const Well> wells() const noexcept { return wells_; }
    std::size_t size() const noexcept { return wells_.size(); }
    const Well& operator[](std::size_t i) const { return wells_[i]; }

    double min_x() const noexcept { return wells_.front().x; }
    double max_x() const noexcept { return wells_.back().x; }

    // Sum of max(a_j, 0): the merged single-well strength that bounds the
    // deepest possible state from below (b <= attractive_strength() / 2).
    double attractive_strength() const noexcept;
    double total_abs_strength() const noexcept;

    // Smallest gap between neighbouring wells; +inf for a single well.
    double min_separation() const noexcept;

    bool operator==(const DeltaPotential&) const = default;

private:
    std::vector<Well> wells_;
};

enum class Parity { even, odd, none };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// A bound state phi(x) = sum_j (a_j / 2b) c_j exp(-b |x - x_j|) with
/// c_j = phi(x_j). Energy is -b^2/2 in natural units.
class BoundState {
public:
    BoundState(double b, std::vector<double> coeffs, Parity parity = Parity::none);

    double b() const noexcept { return b_; }
    double energy() const noexcept { return -0.5 * b_ * b_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    Parity parity() const noexcept { return parity_; }

    BoundState with_parity(Parity p) const { return BoundState(b_, coeffs_, p); }
    BoundState scaled(double factor) const;

private:
    double b_;
    std::vector<double> coeffs_;
    Parity parity_;
};

/// a_j = 2 m alpha_j / hbar^2, positions unchanged, coincident wells merged.
DeltaPotential to_natural(const PhysicalSpec& spec);

/// -hbar^2 b^2 / (2m) in the units of `spec`.
double energy_physical(const BoundState& state, const PhysicalSpec& spec);

}  // namespace deltabound
