#pragma once

#include <complex>
#include <vector>

#include "deltabound/model.hpp"

namespace deltabound::momentum {

using Complex = std::complex<double>;

/// Phi(k) = (1/sqrt(2 pi)) int exp(ikx) phi(x) dx for a bound state, which is
/// a sum of Lorentzians with one shared width b and a phase per well:
///   Phi(k) = sum_j w_j exp(i k x_j) / (k^2 + b^2),  w_j = a_j c_j / sqrt(2 pi).
class MomentumProfile {
public:
    struct Term {
        double weight;
        double x;
    };

    MomentumProfile(double b, std::vector<Term> terms);
    static MomentumProfile of(const BoundState& state, const DeltaPotential& pot);

    double b() const noexcept { return b_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    Complex operator()(double k) const;

    // sum_j |w_j|, the bound on |Phi(k)| (k^2 + b^2).
    double envelope() const noexcept;

private:
    double b_;
    std::vector<Term> terms_;
};

Complex phi_k(const BoundState& state, const DeltaPotential& pot, double k);

/// Phi(k) from adaptive quadrature of the reconstructed phi(x) over
/// [x_min - 40/b, x_max + 40/b], split at every well. The truncated tails are
/// below exp(-40) of the peak. Throws QuadratureError if the estimated error
/// exceeds quad_tol.
Complex numerical_ft(const BoundState& state, const DeltaPotential& pot, double k,
                     double quad_tol = 1e-10);

struct ParsevalNorms {
    double position;  // int |phi|^2 dx, closed form
    double momentum;  // int |Phi|^2 dk, quadrature
};

ParsevalNorms parseval_check(const BoundState& state, const DeltaPotential& pot);

/// Compares Phi(-k) with +/-Phi(k) on a symmetric k grid. The profile is
/// re-centred on the midpoint of its well span first, which is a no-op for
/// centred layouts.
Parity parity_of_profile(const MomentumProfile& profile, double tol = 1e-8);

}  // namespace deltabound::momentum
