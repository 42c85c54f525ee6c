#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltabound/analytic.hpp"
#include "deltabound/momentum.hpp"
#include "deltabound/ndelta.hpp"
#include "deltabound/oracle.hpp"
#include "deltabound/periodic.hpp"

namespace py = pybind11;
using namespace deltabound;

namespace {

DeltaPotential potential_from(const std::vector<std::pair<double, double>>& wells) {
    std::vector<Well> out;
    out.reserve(wells.size());
    for (const auto& [a, x] : wells) out.push_back({a, x});
    return DeltaPotential(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound states of one-dimensional Dirac-delta potentials";

    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::enum_<Parity>(m, "Parity")
        .value("even", Parity::even)
        .value("odd", Parity::odd)
        .value("none", Parity::none);

    py::class_<Well>(m, "Well")
        .def(py::init([](double a, double x) { return Well{a, x}; }), py::arg("a"), py::arg("x"))
        .def_readonly("a", &Well::a)
        .def_readonly("x", &Well::x)
        .def("__repr__", [](const Well& w) {
            return "Well(a=" + std::to_string(w.a) + ", x=" + std::to_string(w.x) + ")";
        });

    py::class_<DeltaPotential>(m, "DeltaPotential")
        .def(py::init(&potential_from), py::arg("wells"), "wells: sequence of (a, x) pairs")
        .def_property_readonly("wells", [](const DeltaPotential& p) {
            return std::vector<Well>(p.wells().begin(), p.wells().end());
        })
        .def("__len__", &DeltaPotential::size)
        .def("__eq__", [](const DeltaPotential& l, const DeltaPotential& r) { return l == r; });

    py::class_<BoundState>(m, "BoundState")
        .def(py::init<double, std::vector<double>, Parity>(), py::arg("b"), py::arg("coeffs"),
             py::arg("parity") = Parity::none)
        .def_property_readonly("b", &BoundState::b)
        .def_property_readonly("energy", &BoundState::energy)
        .def_property_readonly("parity", &BoundState::parity)
        .def_property_readonly("coeffs", [](const BoundState& s) {
            return std::vector<double>(s.coeffs().begin(), s.coeffs().end());
        })
        .def("__repr__", [](const BoundState& s) {
            return "BoundState(b=" + std::to_string(s.b()) + ", parity=" + to_string(s.parity()) + ")";
        });

    py::class_<ndelta::ScanResult>(m, "ScanResult")
        .def_readonly("states", &ndelta::ScanResult::states)
        .def_readonly("warnings", &ndelta::ScanResult::warnings);

    m.def(
        "solve",
        [](const DeltaPotential& pot, double tol, std::optional<double> b_max, std::optional<double> step) {
            auto opts = ndelta::default_scan_options(pot, tol);
            if (b_max) {
                opts.b_max = *b_max;
                opts.step = *b_max / 1000.0;
            }
            if (step) opts.step = *step;
            return ndelta::scan_bound_states(pot, opts);
        },
        py::arg("potential"), py::arg("tol") = 1e-12, py::arg("b_max") = py::none(), py::arg("step") = py::none(),
        "All bound states, deepest first");
    m.def("solve_double", &analytic::solve_double, py::arg("a"), py::arg("L"), py::arg("tol") = 1e-12,
          "Closed-form roots for two equal wells at -L and +L");
    m.def("wavefunction", &ndelta::reconstruct, py::arg("state"), py::arg("potential"), py::arg("x"));
    m.def("phi_k", &momentum::phi_k, py::arg("state"), py::arg("potential"), py::arg("k"));
    m.def("numerical_ft", &momentum::numerical_ft, py::arg("state"), py::arg("potential"), py::arg("k"),
          py::arg("quad_tol") = 1e-10);
    m.def(
        "parseval_check",
        [](const BoundState& s, const DeltaPotential& pot) {
            const auto n = momentum::parseval_check(s, pot);
            return py::make_tuple(n.position, n.momentum);
        },
        py::arg("state"), py::arg("potential"), "(position norm, momentum norm)");

    m.def(
        "verify",
        [](const DeltaPotential& pot, std::optional<double> h, std::optional<double> padding, std::size_t count) {
            oracle::GridParams params;
            params.h = h;
            params.padding = padding;
            params.count = count;
            const auto report = oracle::compare(pot, params);
            py::list rows;
            for (const auto& r : report.rows) {
                py::dict row;
                row["index"] = r.index;
                row["fourier_energy"] = r.fourier_energy;
                row["oracle_energy"] = r.oracle_energy ? py::cast(*r.oracle_energy) : py::none();
                row["abs_error"] = r.abs_error;
                row["rel_error"] = r.rel_error;
                rows.append(row);
            }
            py::dict out;
            out["rows"] = rows;
            out["h"] = report.h;
            out["n"] = report.n;
            out["counts_agree"] = report.counts_agree();
            out["max_rel_error"] = report.max_rel_error();
            return out;
        },
        py::arg("potential"), py::arg("h") = py::none(), py::arg("padding") = py::none(), py::arg("count") = 0,
        "Compare against the finite-difference oracle");

    m.def("band_root", &periodic::band_root, py::arg("K"), py::arg("a"), py::arg("d"), py::arg("tol") = 1e-12);
    m.def(
        "band_edges",
        [](double a, double d) {
            const auto e = periodic::band_edges(a, d);
            return py::make_tuple(e.b_top, e.b_bottom);
        },
        py::arg("a"), py::arg("d"), "(b at K=0, b at K=pi/d or None)");
}
