#include "deltabound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "deltabound/ndelta.hpp"

namespace deltabound::oracle {

GridHamiltonian build_grid(const DeltaPotential& pot, double padding, std::size_t n) {
    if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
    if (!(padding > 0.0) || !std::isfinite(padding)) throw std::invalid_argument("padding must be positive");

    GridHamiltonian H;
    H.n = n;
    H.x_lo = pot.min_x() - padding;
    H.x_hi = pot.max_x() + padding;
    H.h = (H.x_hi - H.x_lo) / static_cast<double>(n - 1);
    const double inv_2h2 = 1.0 / (2.0 * H.h * H.h);
    H.off_diagonal = -inv_2h2;
    H.diagonal.assign(n, 2.0 * inv_2h2);

    for (const auto& w : pot.wells()) {
        const double pos = std::round((w.x - H.x_lo) / H.h);
        const auto node = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(n - 1)));
        if (std::find(H.well_nodes.begin(), H.well_nodes.end(), node) != H.well_nodes.end()) {
            throw std::invalid_argument("grid too coarse: two wells snap to the same node");
        }
        H.well_nodes.push_back(node);
        H.diagonal[node] -= w.a / (2.0 * H.h);
    }
    return H;
}

std::size_t count_below(const GridHamiltonian& H, double lambda) {
    const double e2 = H.off_diagonal * H.off_diagonal;
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
    std::size_t negatives = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < H.n; ++i) {
        q = H.diagonal[i] - lambda - (i == 0 ? 0.0 : e2 / q);
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++negatives;
    }
    return negatives;
}

std::vector<double> lowest_eigenvalues(const GridHamiltonian& H, std::size_t count, double tol) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    if (count > H.n) throw std::invalid_argument("count exceeds grid size");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    // Gershgorin bounds.
    const double radius = 2.0 * std::abs(H.off_diagonal);
    const auto [dmin, dmax] = std::minmax_element(H.diagonal.begin(), H.diagonal.end());
    const double lower = *dmin - radius;
    const double upper = *dmax + radius;

    std::vector<double> values;
    values.reserve(count);
    double floor = lower;
    for (std::size_t k = 0; k < count; ++k) {
        double lo = floor, hi = upper;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(H, mid) > k) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        values.push_back(0.5 * (lo + hi));
        floor = lo;
    }
    return values;
}

double OracleReport::max_rel_error() const noexcept {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.rel_error);
    return worst;
}

OracleReport compare(const DeltaPotential& pot, const GridParams& params, double solver_tol) {
    const auto spectrum = ndelta::scan_bound_states(pot, ndelta::default_scan_options(pot, solver_tol));
    const auto& states = spectrum.states;

    double b_ref = 0.5 * pot.total_abs_strength();
    for (const auto& s : states) b_ref = std::min(b_ref, s.b());
    if (!(b_ref > 0.0)) b_ref = 1.0;

    const double h_target = params.h.value_or(std::min(5e-3, pot.min_separation() / 10.0));
    const double padding = params.padding.value_or(25.0 / b_ref);
    if (!(h_target > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    const double length = pot.max_x() - pot.min_x() + 2.0 * padding;
    const auto n = static_cast<std::size_t>(std::llround(length / h_target)) + 1;

    const auto H = build_grid(pot, padding, std::max<std::size_t>(n, 3));
    OracleReport report;
    report.h = H.h;
    report.n = H.n;
    report.padding = padding;
    report.x_lo = H.x_lo;
    report.x_hi = H.x_hi;
    report.fourier_count = states.size();
    report.oracle_negative_count = count_below(H, 0.0);

    std::vector<double> negatives;
    if (report.oracle_negative_count > 0) {
        negatives = lowest_eigenvalues(H, report.oracle_negative_count, params.eigen_tol);
    }

    const std::size_t rows = params.count == 0 ? states.size() : std::min(params.count, states.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const double e = states[i].energy();
        OracleRow row{i, e, std::nullopt, std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
        for (double ev : negatives) {
            if (!row.oracle_energy || std::abs(ev - e) < std::abs(*row.oracle_energy - e)) {
                row.oracle_energy = ev;
            }
        }
        if (row.oracle_energy) {
            row.abs_error = std::abs(*row.oracle_energy - e);
            row.rel_error = row.abs_error / std::abs(e);
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace deltabound::oracle
