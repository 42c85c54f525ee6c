#pragma once

// Finite-difference cross-check. Shares no code with the Fourier route: the
// Hamiltonian -(1/2) d^2/dx^2 - (1/2) sum_j a_j delta(x - x_j) is put on a
// uniform grid and its lowest eigenvalues come from Sturm-sequence bisection.

#include <cstddef>
#include <optional>
#include <vector>

#include "deltabound/model.hpp"

namespace deltabound::oracle {

/// Symmetric tridiagonal H on n nodes x_i = x_lo + i h with Dirichlet ends:
///   (H phi)_i = (-phi_{i-1} + 2 phi_i - phi_{i+1}) / (2h^2) + V_i phi_i,
/// where V_i = -a_j / (2h) on the node nearest well j and 0 elsewhere.
struct GridHamiltonian {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double h = 0.0;
    std::size_t n = 0;
    std::vector<double> diagonal;
    double off_diagonal = 0.0;  // -1 / (2h^2)
    std::vector<std::size_t> well_nodes;
};

GridHamiltonian build_grid(const DeltaPotential& pot, double padding, std::size_t n);

/// Eigenvalues of H strictly below lambda (Sturm count).
std::size_t count_below(const GridHamiltonian& H, double lambda);

/// The `count` smallest eigenvalues, each to absolute tolerance tol.
std::vector<double> lowest_eigenvalues(const GridHamiltonian& H, std::size_t count, double tol = 1e-12);

struct GridParams {
    std::optional<double> h;        // default: min(5e-3, min well gap / 10)
    std::optional<double> padding;  // default: 25 / b_ref
    std::size_t count = 0;          // rows to compare; 0 = all Fourier states
    double eigen_tol = 1e-12;
};

struct OracleRow {
    std::size_t index;
    double fourier_energy;
    std::optional<double> oracle_energy;
    double abs_error;
    double rel_error;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    std::size_t fourier_count = 0;
    std::size_t oracle_negative_count = 0;
    double h = 0.0;
    std::size_t n = 0;
    double padding = 0.0;
    double x_lo = 0.0;
    double x_hi = 0.0;

    bool counts_agree() const noexcept { return fourier_count == oracle_negative_count; }
    double max_rel_error() const noexcept;
};

/// Natural-units energies from the N-delta scan paired with the nearest
/// negative grid eigenvalue.
OracleReport compare(const DeltaPotential& pot, const GridParams& params = {}, double solver_tol = 1e-12);

}  // namespace deltabound::oracle
