#include "deltabound/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltabound/io.hpp"
#include "deltabound/momentum.hpp"
#include "deltabound/ndelta.hpp"
#include "deltabound/oracle.hpp"
#include "deltabound/periodic.hpp"

namespace deltabound::cli {

namespace {

struct SolverFlags {
    std::string input = "-";
    double tol = 1e-12;
    std::optional<double> b_max;
    std::optional<double> scan_step;

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", input, "Potential JSON file ('-' for stdin)")->capture_default_str();
        cmd->add_option("--tol", tol, "Root tolerance in b")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("--b-max", b_max, "Upper end of the b scan")->check(CLI::PositiveNumber);
        cmd->add_option("--scan-step", scan_step, "Scan grid spacing in b")->check(CLI::PositiveNumber);
    }
};

struct SampleFlags {
    double lo = -5.0;
    double hi = 5.0;
    std::size_t samples = 101;
    std::size_t state = 0;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(path);
    if (!file) throw io::InputError("cannot open input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

ndelta::ScanResult solve(const io::ProblemInput& problem, const SolverFlags& flags, std::ostream& err) {
    auto opts = ndelta::default_scan_options(problem.potential, flags.tol);
    if (flags.b_max) {
        opts.b_max = *flags.b_max;
        opts.step = *flags.b_max / 1000.0;
    }
    if (flags.scan_step) opts.step = *flags.scan_step;
    auto result = ndelta::scan_bound_states(problem.potential, opts);
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    return result;
}

const BoundState& pick_state(const ndelta::ScanResult& spectrum, std::size_t index) {
    if (index >= spectrum.states.size()) {
        throw io::InputError("state index " + std::to_string(index) + " out of range (" +
                             std::to_string(spectrum.states.size()) + " bound states)");
    }
    return spectrum.states[index];
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t samples) {
    if (samples == 0) throw io::InputError("samples must be at least 1");
    if (!(hi >= lo)) throw io::InputError("sample range must satisfy lo <= hi");
    std::vector<double> xs(samples, lo);
    for (std::size_t i = 1; i < samples; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
    return xs;
}

void print_spectrum(const ndelta::ScanResult& spectrum, const io::ProblemInput& problem,
                    const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "index,b,energy,energy_physical,parity,coeffs\n";
        if (spectrum.states.empty()) {
            out << "no bound states\n";
            return;
        }
        for (std::size_t i = 0; i < spectrum.states.size(); ++i) {
            const auto& s = spectrum.states[i];
            out << i << ',' << io::format_double(s.b()) << ',' << io::format_double(s.energy()) << ',';
            if (problem.physical) out << io::format_double(energy_physical(s, *problem.physical));
            out << ',' << to_string(s.parity()) << ',';
            for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
                if (j) out << ';';
                out << io::format_double(s.coeffs()[j]);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::json doc;
    doc["states"] = nlohmann::json::array();
    for (std::size_t i = 0; i < spectrum.states.size(); ++i) {
        doc["states"].push_back(io::state_to_json(spectrum.states[i], i, problem.physical));
    }
    doc["count"] = spectrum.states.size();
    if (spectrum.states.empty()) doc["message"] = "no bound states";
    doc["warnings"] = spectrum.warnings;
    out << doc.dump(2) << '\n';
}

nlohmann::json report_to_json(const oracle::OracleReport& report, double max_rel_error, bool pass) {
    nlohmann::json doc;
    doc["pass"] = pass;
    doc["threshold"] = max_rel_error;
    doc["max_rel_error"] = report.max_rel_error();
    doc["grid"] = {{"h", report.h}, {"n", report.n}, {"padding", report.padding},
                   {"x_lo", report.x_lo}, {"x_hi", report.x_hi}};
    doc["fourier_count"] = report.fourier_count;
    doc["oracle_negative_count"] = report.oracle_negative_count;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["index"] = r.index;
        row["fourier_energy"] = r.fourier_energy;
        row["oracle_energy"] = r.oracle_energy ? nlohmann::json(*r.oracle_energy) : nlohmann::json();
        row["abs_error"] = std::isfinite(r.abs_error) ? nlohmann::json(r.abs_error) : nlohmann::json();
        row["rel_error"] = std::isfinite(r.rel_error) ? nlohmann::json(r.rel_error) : nlohmann::json();
        doc["rows"].push_back(row);
    }
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of one-dimensional Dirac-delta potentials"};
    app.require_subcommand(1);

    SolverFlags solve_flags;
    std::string format = "json";
    auto* solve_cmd = app.add_subcommand("solve", "List bound states");
    solve_flags.attach(solve_cmd);
    solve_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    SolverFlags wave_flags;
    SampleFlags wave;
    auto* wave_cmd = app.add_subcommand("wavefunction", "Sample the normalized phi(x) as CSV");
    wave_flags.attach(wave_cmd);
    wave_cmd->add_option("--x-lo", wave.lo)->capture_default_str();
    wave_cmd->add_option("--x-hi", wave.hi)->capture_default_str();
    wave_cmd->add_option("--samples", wave.samples)->capture_default_str();
    wave_cmd->add_option("--state", wave.state, "Index into the spectrum (0 = ground state)")->capture_default_str();

    SolverFlags mom_flags;
    SampleFlags mom;
    auto* mom_cmd = app.add_subcommand("momentum", "Sample Phi(k) as CSV");
    mom_flags.attach(mom_cmd);
    mom_cmd->add_option("--k-lo", mom.lo)->capture_default_str();
    mom_cmd->add_option("--k-hi", mom.hi)->capture_default_str();
    mom_cmd->add_option("--samples", mom.samples)->capture_default_str();
    mom_cmd->add_option("--state", mom.state)->capture_default_str();

    SolverFlags verify_flags;
    std::optional<double> grid_h;
    std::optional<double> padding;
    std::size_t count = 0;
    double max_rel_error = 1e-2;
    auto* verify_cmd = app.add_subcommand("verify", "Compare against the finite-difference oracle");
    verify_flags.attach(verify_cmd);
    verify_cmd->add_option("--grid-h", grid_h, "Finite-difference grid spacing")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--padding", padding, "Domain padding beyond the outer wells")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--count", count, "Number of states to compare (0 = all)")->capture_default_str();
    verify_cmd->add_option("--max-rel-error", max_rel_error)->capture_default_str();

    double band_a = 0.0;
    double band_d = 0.0;
    std::size_t k_samples = 21;
    double band_tol = 1e-12;
    auto* bands_cmd = app.add_subcommand("bands", "Lowest band of an equally spaced delta lattice as CSV");
    bands_cmd->add_option("--a", band_a, "Well strength (natural units)")->required();
    bands_cmd->add_option("--d", band_d, "Lattice spacing")->required();
    bands_cmd->add_option("--k-samples", k_samples)->capture_default_str();
    bands_cmd->add_option("--tol", band_tol)->capture_default_str()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*solve_cmd) {
            const auto problem = io::parse_problem_text(read_all(solve_flags.input, in));
            print_spectrum(solve(problem, solve_flags, err), problem, format, out);
            return kSuccess;
        }
        if (*wave_cmd) {
            const auto problem = io::parse_problem_text(read_all(wave_flags.input, in));
            const auto xs = uniform_grid(wave.lo, wave.hi, wave.samples);
            const auto spectrum = solve(problem, wave_flags, err);
            const auto& state = pick_state(spectrum, wave.state);
            out << "x,phi\n";
            for (double x : xs) {
                out << io::format_double(x) << ','
                    << io::format_double(ndelta::reconstruct(state, problem.potential, x)) << '\n';
            }
            return kSuccess;
        }
        if (*mom_cmd) {
            const auto problem = io::parse_problem_text(read_all(mom_flags.input, in));
            const auto ks = uniform_grid(mom.lo, mom.hi, mom.samples);
            const auto spectrum = solve(problem, mom_flags, err);
            const auto profile = momentum::MomentumProfile::of(pick_state(spectrum, mom.state), problem.potential);
            out << "k,re_phi,im_phi\n";
            for (double k : ks) {
                const auto v = profile(k);
                out << io::format_double(k) << ',' << io::format_double(v.real()) << ','
                    << io::format_double(v.imag()) << '\n';
            }
            return kSuccess;
        }
        if (*verify_cmd) {
            const auto problem = io::parse_problem_text(read_all(verify_flags.input, in));
            oracle::GridParams params;
            params.h = grid_h;
            params.padding = padding;
            params.count = count;
            const auto report = oracle::compare(problem.potential, params, verify_flags.tol);
            const bool pass = report.max_rel_error() <= max_rel_error;
            out << report_to_json(report, max_rel_error, pass).dump(2) << '\n';
            if (!report.counts_agree()) {
                err << "warning: oracle found " << report.oracle_negative_count << " negative eigenvalues, "
                    << report.fourier_count << " Fourier states\n";
            }
            return pass ? kSuccess : kVerificationFailed;
        }
        if (*bands_cmd) {
            if (!(band_d > 0.0)) throw io::InputError("lattice spacing --d must be positive");
            if (!(band_a > 0.0)) throw io::InputError("strength --a must be positive");
            if (k_samples == 0) throw io::InputError("--k-samples must be at least 1");
            const auto points = periodic::band_sweep(band_a, band_d, k_samples, band_tol);
            if (points.size() < k_samples) {
                err << "warning: " << (k_samples - points.size())
                    << " K samples have no bound root (band reaches the continuum)\n";
            }
            out << "K,b,E\n";
            for (const auto& p : points) {
                out << io::format_double(p.K) << ',' << io::format_double(p.b) << ','
                    << io::format_double(p.energy()) << '\n';
            }
            return kSuccess;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    }
    return kInputError;
}

}  // namespace deltabound::cli
