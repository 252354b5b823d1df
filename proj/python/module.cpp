// Python bindings: the invariants, relaxations, projections, and experiment
// drivers, with numpy arrays standing in for SymMatrix.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvxgraph/cli.hpp"
#include "cvxgraph/constraint_config.hpp"
#include "cvxgraph/constraints.hpp"
#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"
#include "cvxgraph/experiments.hpp"
#include "cvxgraph/graph.hpp"
#include "cvxgraph/graph_io.hpp"
#include "cvxgraph/invariants.hpp"
#include "cvxgraph/majorization.hpp"
#include "cvxgraph/permutation.hpp"
#include "cvxgraph/rng.hpp"
#include "cvxgraph/sdp.hpp"
#include "cvxgraph/solver_config.hpp"

namespace py = pybind11;
using namespace cvxgraph;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

SymMatrix to_mat(const Array& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw std::invalid_argument("expected a square 2-D array");
    const int n = static_cast<int>(arr.shape(0));
    std::vector<double> entries(static_cast<size_t>(n) * n);
    std::memcpy(entries.data(), arr.data(), entries.size() * sizeof(double));
    return SymMatrix(n, std::move(entries));
}

py::array_t<double> from_mat(const SymMatrix& m) {
    const int n = m.n();
    py::array_t<double> arr({n, n});
    std::memcpy(arr.mutable_data(), m.data(), static_cast<size_t>(n) * n * sizeof(double));
    return arr;
}

// Accepts a preset name, a file path, or inline JSON (leading '{').
ConstraintConfig resolve_config(const std::string& spec) {
    std::string trimmed = spec;
    size_t start = trimmed.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && trimmed[start] == '{') return parse_constraint_config(spec);
    return load_constraint_config(spec);
}

SolverConfig make_config(int max_iter, double tol) {
    SolverConfig cfg;
    if (max_iter > 0) cfg.max_iter = max_iter;
    if (tol > 0.0) cfg.feasibility_tol = tol;
    return cfg;
}

py::dict report_dict(const TrialReport& r) {
    py::dict d;
    d["trial_index"] = r.trial_index;
    d["seed"] = r.seed;
    d["success"] = r.success;
    d["recovery_error_inf"] = r.recovery_error_inf;
    d["iterations"] = r.iterations;
    d["elapsed_ms"] = r.elapsed_ms;
    d["objective_value"] = r.objective_value;
    d["dykstra_failures"] = r.dykstra_failures;
    d["success_rule"] = r.success_rule;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Convex graph invariants: exact values, relaxations, projections, experiments";

    py::register_exception<too_large_error>(m, "TooLargeError", PyExc_ValueError);
    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

    m.def(
        "builtin_graph", [](const std::string& spec) { return from_mat(builtin_graph(spec).adjacency); },
        py::arg("spec"), "Adjacency matrix of a builtin graph (cycle:16, clebsch, ...)");
    m.def(
        "parse_graph", [](const std::string& text) { return from_mat(parse_matrix(text)); },
        py::arg("text"), "Parse the plain-text matrix format");
    m.def(
        "format_graph", [](const Array& a) { return serialize_matrix(to_mat(a)); }, py::arg("a"),
        "Render a matrix in the plain-text format (round-trips exactly)");

    // Exact invariants.
    m.def("edge_sum", [](const Array& a) { return edge_sum(to_mat(a)); }, py::arg("a"));
    m.def("max_degree", [](const Array& a) { return max_degree(to_mat(a)); }, py::arg("a"));
    m.def("degree_sequence", [](const Array& a) { return degree_sequence(to_mat(a)); }, py::arg("a"));
    m.def("maxcut_exact", [](const Array& a) { return maxcut_exact(to_mat(a)); }, py::arg("a"));
    m.def("isoperimetric_exact", [](const Array& a) { return isoperimetric_exact(to_mat(a)); },
          py::arg("a"));
    m.def("stability_exact", [](const Array& a) { return stability_exact(to_mat(a)); }, py::arg("a"));
    m.def(
        "motzkin_straus",
        [](const Array& a, int restarts, std::uint64_t seed) {
            RngStream rng(seed);
            return motzkin_straus(to_mat(a), restarts, rng);
        },
        py::arg("a"), py::arg("restarts") = 50, py::arg("seed") = 0);
    m.def(
        "theta_exact",
        [](const Array& pattern, const Array& a) {
            SymMatrix g = to_mat(a);
            return theta_exact(zero_pad(to_mat(pattern), g.n()), g);
        },
        py::arg("pattern"), py::arg("a"),
        "Max of tr(P Pi A Pi') over permutations; pattern is zero-padded");
    m.def("fiedler_value", [](const Array& a) { return fiedler_value(to_mat(a)); }, py::arg("a"));
    m.def(
        "spectrum", [](const Array& a) { return eig_sym(to_mat(a)).values; }, py::arg("a"),
        "Eigenvalues, descending");

    // Relaxations.
    m.def(
        "lambda_bound",
        [](const Array& pattern, const Array& a) {
            SymMatrix g = to_mat(a);
            return lambda_bound(zero_pad(to_mat(pattern), g.n()), g);
        },
        py::arg("pattern"), py::arg("a"), "Spectral upper bound on theta_exact");
    m.def(
        "maxcut_sdp", [](const Array& a) { return maxcut_sdp(to_mat(a)); }, py::arg("a"),
        "min tr(XA) over the elliptope");
    m.def(
        "maxcut_sdp_bound", [](const Array& a) { return maxcut_sdp_bound(to_mat(a)); }, py::arg("a"),
        "SDP upper bound on the maximum cut");
    m.def(
        "stability_sdp", [](const Array& a) { return stability_sdp(to_mat(a)); }, py::arg("a"),
        "SDP lower bound on the Motzkin-Straus value");
    m.def(
        "qap_sdp",
        [](const Array& pattern, const Array& a) {
            SymMatrix g = to_mat(a);
            QapBound b = qap_sdp(zero_pad(to_mat(pattern), g.n()), g);
            py::dict d;
            d["value"] = b.value;
            d["sigma_ratio"] = b.sigma_ratio;
            d["rank_one"] = b.rank_one;
            d["iterations"] = b.iterations;
            return d;
        },
        py::arg("pattern"), py::arg("a"), "SDP upper bound on theta_exact, with a rank certificate");

    // Constraint sets and projection.
    m.def(
        "project_onto",
        [](const std::string& constraints, const Array& x, double tol) {
            ConstraintConfig config = resolve_config(constraints);
            SymMatrix mat = to_mat(x);
            if (config.n != mat.n())
                throw std::invalid_argument("config size does not match the matrix");
            SolverConfig cfg = make_config(0, tol);
            ProjectionReport rep = dykstra_project(config.sets, mat, cfg);
            py::dict d;
            d["point"] = from_mat(rep.point);
            d["max_residual"] = rep.max_set_residual;
            d["cycles"] = rep.cycles;
            d["converged"] = rep.converged;
            return d;
        },
        py::arg("constraints"), py::arg("x"), py::arg("tol") = 0.0,
        "Project onto the intersection described by a preset name, file path, or JSON text");
    m.def(
        "constraint_residual",
        [](const std::string& constraints, const Array& x) {
            ConstraintConfig config = resolve_config(constraints);
            SymMatrix mat = to_mat(x);
            std::vector<double> out;
            out.reserve(config.sets.size());
            for (const ConstraintSet& s : config.sets) out.push_back(residual(s, mat));
            return out;
        },
        py::arg("constraints"), py::arg("x"), "Per-set violation measures");

    // Experiment drivers.
    m.def(
        "deconvolve",
        [](const Array& a, const std::string& c1, const std::string& c2, int max_iter, double tol) {
            ConstraintConfig f1 = resolve_config(c1);
            ConstraintConfig f2 = resolve_config(c2);
            DeconvolveResult res = deconvolve(to_mat(a), f1.sets, f2.sets, make_config(max_iter, tol));
            return py::make_tuple(from_mat(res.a1), from_mat(res.a2), report_dict(res.report));
        },
        py::arg("a"), py::arg("c1"), py::arg("c2"), py::arg("max_iter") = 0, py::arg("tol") = 0.0,
        "Split a into summands constrained to two families; returns (a1, a2, report)");
    m.def(
        "generate",
        [](const std::string& constraints, std::uint64_t seed, double tol) {
            ConstraintConfig config = resolve_config(constraints);
            RngStream rng(seed);
            GenerateResult res = generate(config.sets, config.n, rng, make_config(0, tol));
            return py::make_tuple(from_mat(res.a), report_dict(res.report));
        },
        py::arg("constraints"), py::arg("seed") = 0, py::arg("tol") = 0.0,
        "Maximize a random linear functional over the constraint set; returns (a, report)");
    m.def(
        "hypothesis_test",
        [](const Array& a, const std::string& c1, const std::string& c2, double tol) {
            ConstraintConfig f1 = resolve_config(c1);
            ConstraintConfig f2 = resolve_config(c2);
            HypothesisResult res =
                hypothesis_test(to_mat(a), f1.sets, f2.sets, make_config(0, tol));
            py::dict d;
            d["winner"] = res.winner;
            d["tie"] = res.tie;
            d["score1"] = res.score1;
            d["score2"] = res.score2;
            d["m1"] = from_mat(res.m1);
            d["m2"] = from_mat(res.m2);
            return d;
        },
        py::arg("a"), py::arg("c1"), py::arg("c2"), py::arg("tol") = 0.0,
        "Which family tracks the sample better; returns scores, winner, and both maximizers");
    m.def(
        "hull_membership",
        [](const Array& a, const Array& x) {
            HullResult res = hull_membership(to_mat(a), to_mat(x));
            py::dict d;
            d["inside"] = res.inside;
            d["distance"] = res.distance;
            d["projection"] = from_mat(res.projection);
            d["separator"] = from_mat(res.separator);
            return d;
        },
        py::arg("a"), py::arg("x"),
        "Membership of x in the convex hull of all relabelings of a (n <= 5)");

    // Majorization utilities.
    m.def("majorizes", [](const std::vector<double>& a, const std::vector<double>& b) {
        return majorizes(a, b);
    });
    m.def("project_permutahedron",
          [](const std::vector<double>& x, const std::vector<double>& ref) {
              return project_permutahedron(x, ref);
          });

    // The full command-line surface, for scripting parity with the binary.
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}
