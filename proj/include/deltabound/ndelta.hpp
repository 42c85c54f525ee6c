#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "deltabound/model.hpp"

namespace deltabound::ndelta {

/// Self-consistency system at trial decay rate b. Evaluating the
/// reconstruction phi(x) = sum_j (a_j/2b) c_j exp(-b|x - x_j|) at every well
/// gives c = M c, so bound states are the zeros of det(M - I).
struct CharacteristicSystem {
    double b = 0.0;
    Eigen::MatrixXd matrix;  // M_ij = (a_j / 2b) exp(-b |x_i - x_j|)
    double residual = 0.0;   // det(M - I)
};

CharacteristicSystem characteristic_system(const DeltaPotential& pot, double b);
double char_residual(const DeltaPotential& pot, double b);

/// Number of bound states with decay rate strictly greater than b.
///
/// Uses the inertia of S(b) = 2b diag(1/a) - E(b), E_ij = exp(-b|x_i - x_j|),
/// over the wells with a_j != 0. S increases monotonically with b, and each
/// eigenvalue crossing zero is a bound state, so the count is the number of
/// negative eigenvalues of S(b) minus the number of repulsive wells.
std::size_t states_deeper_than(const DeltaPotential& pot, double b);

struct ScanOptions {
    double b_max = 0.0;
    double step = 0.0;
    double tol = 1e-12;
};

/// b_max = sum|a_j|/2 + 1, step = b_max / 1000.
ScanOptions default_scan_options(const DeltaPotential& pot, double tol = 1e-12);

struct ScanResult {
    std::vector<BoundState> states;     // normalized, ascending in energy
    std::vector<std::string> warnings;  // near-degenerate pairs, sign/count mismatches
};

/// Scans b over (tol, b_max] on a uniform grid, isolates every root of
/// det(M(b) - I) and refines it to |db| <= tol. Brackets holding more than one
/// root (sign change invisible to the determinant) are split using
/// states_deeper_than until each root is alone.
ScanResult scan_bound_states(const DeltaPotential& pot, const ScanOptions& opts);
ScanResult scan_bound_states(const DeltaPotential& pot);

/// Direction spanning the (near) null space of M(b) - I, by Gaussian
/// elimination with full pivoting: the last, smallest pivot is set free and
/// the rest follow by back-substitution.
std::vector<double> null_direction(const Eigen::MatrixXd& m_minus_identity);

double reconstruct(const BoundState& state, const DeltaPotential& pot, double x);

/// Integral of phi^2 from the closed-form overlap
/// int exp(-b|x - x_i|) exp(-b|x - x_j|) dx = exp(-b d_ij) (d_ij + 1/b).
double norm_squared(const BoundState& state, const DeltaPotential& pot);

/// Scales to unit norm; the first non-negligible coefficient is made positive.
BoundState normalize(const BoundState& state, const DeltaPotential& pot);

/// Even/odd when both layout and strengths mirror about the midpoint of the
/// well span and the reversed coefficients equal +/- coeffs within
/// tol * max|c_j|; none otherwise.
Parity parity_classify(const BoundState& state, const DeltaPotential& pot, double tol = 1e-8);

}  // namespace deltabound::ndelta
