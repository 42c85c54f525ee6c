#include "deltabound/ndelta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "deltabound/roots.hpp"

namespace deltabound::ndelta {

namespace {

// Tolerance used when labelling scan results.
constexpr double kScanParityTol = 1e-6;

std::string describe(const char* what, double b, double extra = NAN) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at b=" << b;
    if (!std::isnan(extra)) os << " (db=" << extra << ")";
    return os.str();
}

// Wells mirror-symmetric about the midpoint of their span, with matching strengths.
bool mirror_symmetric(const DeltaPotential& pot) {
    const std::size_t n = pot.size();
    const double center = 0.5 * (pot.min_x() + pot.max_x());
    const double x_tol = 1e-9 * std::max(1.0, pot.max_x() - pot.min_x());
    double a_scale = 0.0;
    for (const auto& w : pot.wells()) a_scale = std::max(a_scale, std::abs(w.a));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& w = pot[i];
        const auto& m = pot[n - 1 - i];
        if (std::abs((w.x - center) + (m.x - center)) > x_tol) return false;
        if (std::abs(w.a - m.a) > 1e-9 * a_scale) return false;
    }
    return true;
}

// On a mirror-symmetric layout bound states are parity eigenstates; keep the
// parity component of c that (M - I) annihilates best.
std::vector<double> parity_projected(const Eigen::MatrixXd& m_minus_identity, const std::vector<double>& c) {
    const std::size_t n = c.size();
    double best = INFINITY;
    std::vector<double> chosen = c;
    for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = 0.5 * (c[i] + sign * c[n - 1 - i]);
        const double len = v.norm();
        if (!(len > 0.0)) continue;
        const double r = (m_minus_identity * v).norm() / len;
        if (r < best) {
            best = r;
            chosen.assign(v.data(), v.data() + v.size());
        }
    }
    return chosen;
}

}  // namespace

CharacteristicSystem characteristic_system(const DeltaPotential& pot, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    const auto n = static_cast<Eigen::Index>(pot.size());
    CharacteristicSystem sys;
    sys.b = b;
    sys.matrix.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double d = std::abs(pot[i].x - pot[j].x);
            sys.matrix(i, j) = pot[j].a / (2.0 * b) * std::exp(-b * d);
        }
    }
    const Eigen::MatrixXd shifted = sys.matrix - Eigen::MatrixXd::Identity(n, n);
    sys.residual = shifted.partialPivLu().determinant();
    return sys;
}

double char_residual(const DeltaPotential& pot, double b) {
    return characteristic_system(pot, b).residual;
}

std::size_t states_deeper_than(const DeltaPotential& pot, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
    std::vector<Well> active;
    std::size_t repulsive = 0;
    for (const auto& w : pot.wells()) {
        if (w.a == 0.0) continue;
        active.push_back(w);
        if (w.a < 0.0) ++repulsive;
    }
    if (active.empty()) return 0;
    const auto n = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            s(i, j) = -std::exp(-b * std::abs(active[i].x - active[j].x));
        }
        s(i, i) += 2.0 * b / active[i].a;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
    std::size_t negative = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (eig.eigenvalues()(i) < 0.0) ++negative;
    }
    return negative > repulsive ? negative - repulsive : 0;
}

ScanOptions default_scan_options(const DeltaPotential& pot, double tol) {
    ScanOptions opts;
    opts.tol = tol;
    opts.b_max = 0.5 * pot.total_abs_strength() + 1.0;
    opts.step = opts.b_max / 1000.0;
    return opts;
}

std::vector<double> null_direction(const Eigen::MatrixXd& m_minus_identity) {
    Eigen::MatrixXd a = m_minus_identity;
    const Eigen::Index n = a.rows();
    if (n == 0 || a.cols() != n) throw std::invalid_argument("null_direction: square matrix required");
    std::vector<Eigen::Index> col_perm(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) col_perm[static_cast<std::size_t>(i)] = i;

    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index pr = k, pc = k;
        double best = -1.0;
        for (Eigen::Index i = k; i < n; ++i) {
            for (Eigen::Index j = k; j < n; ++j) {
                if (std::abs(a(i, j)) > best) {
                    best = std::abs(a(i, j));
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0.0) break;  // remaining block is zero; any completion works
        a.row(k).swap(a.row(pr));
        a.col(k).swap(a.col(pc));
        std::swap(col_perm[static_cast<std::size_t>(k)], col_perm[static_cast<std::size_t>(pc)]);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double factor = a(i, k) / a(k, k);
            a.row(i).tail(n - k) -= factor * a.row(k).tail(n - k);
        }
    }

    // Back-substitution seeded by the last (smallest) pivot's unknown.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    y(n - 1) = 1.0;
    for (Eigen::Index k = n - 2; k >= 0; --k) {
        const double pivot = a(k, k);
        if (pivot == 0.0) {
            y(k) = 0.0;
            continue;
        }
        y(k) = -a.row(k).tail(n - k - 1).dot(y.tail(n - k - 1)) / pivot;
    }
    std::vector<double> c(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        c[static_cast<std::size_t>(col_perm[static_cast<std::size_t>(k)])] = y(k);
    }
    return c;
}

ScanResult scan_bound_states(const DeltaPotential& pot, const ScanOptions& opts) {
    if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(opts.step > 0.0)) throw std::invalid_argument("scan step must be positive");
    if (!(opts.b_max > 0.0) || !std::isfinite(opts.b_max)) {
        throw std::invalid_argument("b_max must be positive and finite");
    }
    if (opts.step >= opts.b_max) throw std::invalid_argument("scan step must be smaller than b_max");
    if (opts.b_max < 0.5 * pot.attractive_strength() + opts.step) {
        throw std::invalid_argument("b_max must exceed sum(max(a_j,0))/2 + step");
    }

    ScanResult result;
    const double tol = opts.tol;
    auto count = [&](double b) { return states_deeper_than(pot, b); };
    auto residual = [&](double b) { return char_residual(pot, b); };

    std::vector<double> grid{tol};
    for (std::size_t k = 1;; ++k) {
        const double b = static_cast<double>(k) * opts.step;
        if (b >= opts.b_max) {
            grid.push_back(opts.b_max);
            break;
        }
        if (b > tol) grid.push_back(b);
    }
    std::vector<std::size_t> counts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) counts[i] = count(grid[i]);
    if (counts.back() != 0) {
        result.warnings.push_back(describe("states deeper than b_max were not resolved", opts.b_max));
    }

    std::vector<double> roots;

    // Root known to be the only one in (lo, hi]: bisect the determinant when it
    // changes sign, otherwise bisect the state count itself.
    auto refine = [&](double lo, double hi, std::size_t n_lo) {
        const double f_lo = residual(lo);
        const double f_hi = residual(hi);
        if (f_lo != 0.0 && f_hi != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
            return bisect(residual, lo, hi, std::numeric_limits<double>::min());
        }
        // Polish past tol: null directions of nearly degenerate pairs need it.
        for (;;) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count(mid) == n_lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::function<void(double, double, std::size_t, std::size_t)> isolate =
        [&](double lo, double hi, std::size_t n_lo, std::size_t n_hi) {
            const std::size_t inside = n_lo - n_hi;
            if (inside == 0) return;
            if (inside == 1) {
                roots.push_back(refine(lo, hi, n_lo));
                return;
            }
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= tol || mid <= lo || mid >= hi) {
                result.warnings.push_back(describe("unresolved cluster of states", mid));
                roots.push_back(mid);
                return;
            }
            const std::size_t n_mid = std::clamp(count(mid), n_hi, n_lo);
            isolate(lo, mid, n_lo, n_mid);
            isolate(mid, hi, n_mid, n_hi);
        };

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (counts[i] > counts[i + 1]) {
            isolate(grid[i], grid[i + 1], counts[i], counts[i + 1]);
        } else {
            const double f_lo = residual(grid[i]);
            const double f_hi = residual(grid[i + 1]);
            if (f_lo != 0.0 && f_hi != 0.0 && std::signbit(f_lo) != std::signbit(f_hi)) {
                result.warnings.push_back(
                    describe("determinant sign change without a state crossing", grid[i]));
            }
        }
    }

    std::sort(roots.begin(), roots.end(), std::greater<>());
    for (std::size_t i = 1; i < roots.size(); ++i) {
        const double gap = roots[i - 1] - roots[i];
        if (gap < opts.step) {
            result.warnings.push_back(describe("near-degenerate pair", roots[i], gap));
        }
    }

    const auto n = static_cast<Eigen::Index>(pot.size());
    const bool symmetric = mirror_symmetric(pot);
    for (double b : roots) {
        const auto sys = characteristic_system(pot, b);
        const Eigen::MatrixXd shifted = sys.matrix - Eigen::MatrixXd::Identity(n, n);
        auto c = null_direction(shifted);
        if (symmetric) c = parity_projected(shifted, c);
        auto state = normalize(BoundState(b, std::move(c)), pot);
        result.states.push_back(state.with_parity(parity_classify(state, pot, kScanParityTol)));
    }
    return result;
}

ScanResult scan_bound_states(const DeltaPotential& pot) {
    return scan_bound_states(pot, default_scan_options(pot));
}

double reconstruct(const BoundState& state, const DeltaPotential& pot, double x) {
    const auto c = state.coeffs();
    if (c.size() != pot.size()) throw std::invalid_argument("state does not match potential");
    const double b = state.b();
    double phi = 0.0;
    for (std::size_t j = 0; j < pot.size(); ++j) {
        phi += pot[j].a / (2.0 * b) * c[j] * std::exp(-b * std::abs(x - pot[j].x));
    }
    return phi;
}

double norm_squared(const BoundState& state, const DeltaPotential& pot) {
    const auto c = state.coeffs();
    if (c.size() != pot.size()) throw std::invalid_argument("state does not match potential");
    const double b = state.b();
    std::vector<double> w(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) w[j] = pot[j].a * c[j] / (2.0 * b);
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            const double d = std::abs(pot[i].x - pot[j].x);
            total += w[i] * w[j] * std::exp(-b * d) * (d + 1.0 / b);
        }
    }
    return total;
}

BoundState normalize(const BoundState& state, const DeltaPotential& pot) {
    const double n2 = norm_squared(state, pot);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw SolverError("cannot normalize a state with zero norm");
    }
    const auto c = state.coeffs();
    double largest = 0.0;
    for (double v : c) largest = std::max(largest, std::abs(v));
    double sign = 1.0;
    for (double v : c) {
        if (std::abs(v) > 1e-8 * largest) {
            sign = v < 0.0 ? -1.0 : 1.0;
            break;
        }
    }
    return state.scaled(sign / std::sqrt(n2));
}

Parity parity_classify(const BoundState& state, const DeltaPotential& pot, double tol) {
    const auto c = state.coeffs();
    const std::size_t n = pot.size();
    if (c.size() != n) return Parity::none;
    if (!mirror_symmetric(pot)) return Parity::none;
    double largest = 0.0;
    for (double v : c) largest = std::max(largest, std::abs(v));
    const double thr = tol * largest;
    bool even = true, odd = true;
    for (std::size_t i = 0; i < n; ++i) {
        even = even && std::abs(c[i] - c[n - 1 - i]) <= thr;
        odd = odd && std::abs(c[i] + c[n - 1 - i]) <= thr;
    }
    if (even && !odd) return Parity::even;
    if (odd && !even) return Parity::odd;
    return Parity::none;
}

}  // namespace deltabound::ndelta
