#pragma once

#include <optional>
#include <vector>

#include "deltabound/model.hpp"

namespace deltabound::analytic {

inline constexpr double kDefaultTol = 1e-12;

/// Single well of strength a at the origin. Only a > 0 binds, with b = a/2.
std::optional<BoundState> single_bound_state(double a);

// Continuity residuals for two equal wells a at -L and +L. Roots in b > 0 are
// the even and odd bound states respectively.
//   even:  exp(-2bL) - (2b/a - 1)
//   odd:   exp(-2bL) - (1 - 2b/a)
double even_residual(double b, double a, double L);
double odd_residual(double b, double a, double L);

/// The odd state exists iff a > 0 and aL > 1; at aL == 1 the two sides of
/// the odd condition only touch at b = 0.
bool odd_state_exists(double a, double L);

/// Bound states of equal wells a at +/-L, ascending in energy. The even state
/// carries coeffs {1, 1} and the odd one {-1, 1}.
std::vector<BoundState> solve_double(double a, double L, double tol = kDefaultTol);

}  // namespace deltabound::analytic
