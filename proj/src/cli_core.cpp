#include "cvxgraph/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cvxgraph/constraint_config.hpp"
#include "cvxgraph/constraints.hpp"
#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"
#include "cvxgraph/experiments.hpp"
#include "cvxgraph/graph_io.hpp"
#include "cvxgraph/invariants.hpp"
#include "cvxgraph/permutation.hpp"
#include "cvxgraph/rng.hpp"
#include "cvxgraph/sdp.hpp"
#include "cvxgraph/solver_config.hpp"

namespace cvxgraph {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitNoConverge = 4;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_vector(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += fmt12(v[i]);
    }
    return s;
}

// Shared flag bundle; each subcommand registers the subset it honors.
struct Options {
    std::string graph;
    std::string g1, g2;
    std::string name;
    std::string pattern;
    std::vector<std::string> constraints;
    std::string out;
    std::string emit_graph;
    int trials = 1;
    std::uint64_t seed = 0;
    int jobs = 0;
    int max_iter = 0;
    double tol = 0.0;
};

SolverConfig make_config(const Options& opt) {
    SolverConfig cfg;
    if (opt.max_iter > 0) cfg.max_iter = opt.max_iter;
    if (opt.tol > 0.0) cfg.feasibility_tol = opt.tol;
    cfg.jobs = opt.jobs;
    return cfg;
}

// Per-trial generators are seeded independently so that trial results do not
// depend on scheduling order.
std::uint64_t trial_seed(std::uint64_t master, int trial) {
    return master ^ static_cast<std::uint64_t>(trial);
}

// Runs `body(trial)` over a pool of `jobs` workers (0 = machine parallelism).
// The first exception, if any, is rethrown on the caller's thread.
template <typename Body>
void run_trials(int trials, int jobs, Body&& body) {
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min(jobs, trials);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto loop = [&] {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (jobs <= 1) {
        loop();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) workers.emplace_back(loop);
        for (auto& t : workers) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

void deliver(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.out.empty()) {
        out << text;
    } else {
        atomic_write_text(opt.out, text);
    }
}

int finish_harness(const Options& opt, const std::string& csv, int nonconvergent, int trials,
                   std::ostream& out, std::ostream& err) {
    deliver(opt, csv, out);
    if (2 * nonconvergent > trials) {
        err << "error: " << nonconvergent << " of " << trials
            << " trials had intersection projections that missed tolerance\n";
        return kExitNoConverge;
    }
    return kExitOk;
}

int cmd_invariant(const Options& opt, std::ostream& out) {
    SymMatrix a = resolve_graph_spec(opt.graph);
    SolverConfig cfg = make_config(opt);
    auto need_pattern = [&]() -> SymMatrix {
        if (opt.pattern.empty())
            throw std::invalid_argument("--pattern is required for " + opt.name);
        return zero_pad(resolve_graph_spec(opt.pattern), a.n());
    };

    std::string line;
    if (opt.name == "edges") {
        line = fmt12(edge_sum(a));
    } else if (opt.name == "maxdeg") {
        line = fmt12(max_degree(a));
    } else if (opt.name == "maxcut") {
        line = fmt12(maxcut_exact(a));
    } else if (opt.name == "maxcut-sdp") {
        line = fmt12(maxcut_sdp_bound(a, cfg));
    } else if (opt.name == "cheeger") {
        line = fmt12(isoperimetric_exact(a));
    } else if (opt.name == "stability") {
        line = fmt12(stability_exact(a));
    } else if (opt.name == "motzkin") {
        RngStream rng(opt.seed);
        line = fmt12(motzkin_straus(a, cfg.restarts, rng));
    } else if (opt.name == "theta") {
        line = fmt12(theta_exact(need_pattern(), a));
    } else if (opt.name == "lambda-bound") {
        line = fmt12(lambda_bound(need_pattern(), a));
    } else if (opt.name == "fiedler") {
        line = fmt12(fiedler_value(a));
    } else if (opt.name == "degseq") {
        line = fmt_vector(degree_sequence(a));
    } else if (opt.name == "spectrum") {
        line = fmt_vector(eig_sym(a).values);
    } else {
        throw std::invalid_argument("unknown invariant name: " + opt.name);
    }
    out << line << '\n';
    return kExitOk;
}

int cmd_deconvolve(const Options& opt, std::ostream& out, std::ostream& err) {
    SymMatrix g1 = resolve_graph_spec(opt.g1);
    SymMatrix g2 = resolve_graph_spec(opt.g2);
    if (g1.n() != g2.n())
        throw std::invalid_argument("--g1 and --g2 must have the same size");
    const int n = g1.n();
    SolverConfig cfg = make_config(opt);
    const std::vector<ConstraintSet> c1 = {ConstraintSet::box(), ConstraintSet::spectral_hull(g1)};
    const std::vector<ConstraintSet> c2 = {ConstraintSet::box(), ConstraintSet::spectral_hull(g2)};

    std::vector<TrialReport> rows(static_cast<size_t>(opt.trials));
    run_trials(opt.trials, opt.jobs, [&](int t) {
        RngStream rng(trial_seed(opt.seed, t));
        SymMatrix t1 = conjugate(g1, random_permutation(rng, n));
        SymMatrix t2 = conjugate(g2, random_permutation(rng, n));
        SymMatrix a = t1 + t2;
        DeconvolveResult res = deconvolve(a, c1, c2, cfg, &t1);
        res.report.trial_index = t;
        res.report.seed = trial_seed(opt.seed, t);
        rows[static_cast<size_t>(t)] = res.report;
    });

    std::string csv = "trial,seed,success,recovery_error_inf,iterations,elapsed_ms\n";
    int successes = 0;
    int nonconvergent = 0;
    for (const TrialReport& r : rows) {
        successes += r.success ? 1 : 0;
        nonconvergent += r.dykstra_failures > 0 ? 1 : 0;
        csv += std::to_string(r.trial_index) + ',' + std::to_string(r.seed) + ',' +
               (r.success ? '1' : '0') + ',' + fmt12(r.recovery_error_inf) + ',' +
               std::to_string(r.iterations) + ',' + fmt12(r.elapsed_ms) + '\n';
    }
    csv += "# successes " + std::to_string(successes) + "/" + std::to_string(opt.trials) + '\n';
    return finish_harness(opt, csv, nonconvergent, opt.trials, out, err);
}

int cmd_generate(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.constraints.size() != 1)
        throw std::invalid_argument("generate expects exactly one --constraints config");
    ConstraintConfig config = load_constraint_config(opt.constraints[0]);
    SolverConfig cfg = make_config(opt);

    // Degrees are compared against the configured degree target when one is
    // present, otherwise against the trial's own mean degree.
    double degree_target = -1.0;
    for (const ConstraintSet& s : config.sets)
        if (s.kind == ConstraintKind::degree_eq) degree_target = s.value;

    if (!opt.emit_graph.empty()) std::filesystem::create_directories(opt.emit_graph);

    struct Row {
        TrialReport report;
        double degree_deviation = 0.0;
        double fiedler = 0.0;
        double nonzero_per_node = 0.0;
    };
    std::vector<Row> rows(static_cast<size_t>(opt.trials));
    run_trials(opt.trials, opt.jobs, [&](int t) {
        RngStream rng(trial_seed(opt.seed, t));
        GenerateResult res = generate(config.sets, config.n, rng, cfg);
        const SymMatrix& a = res.a;
        const int n = a.n();
        std::vector<double> deg(static_cast<size_t>(n), 0.0);
        int nonzero = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                deg[static_cast<size_t>(i)] += a(i, j);
                deg[static_cast<size_t>(j)] += a(i, j);
                nonzero += std::abs(a(i, j)) > 1e-3 ? 1 : 0;
            }
        double target = degree_target;
        if (target < 0.0) {
            target = 0.0;
            for (double d : deg) target += d;
            target /= n;
        }
        double dev = 0.0;
        for (double d : deg) dev = std::max(dev, std::abs(d - target));

        Row row;
        row.report = res.report;
        row.report.trial_index = t;
        row.report.seed = trial_seed(opt.seed, t);
        row.degree_deviation = dev;
        row.fiedler = lambda2_laplacian_pair(a).first;
        row.nonzero_per_node = n > 0 ? 2.0 * nonzero / n : 0.0;
        rows[static_cast<size_t>(t)] = row;

        if (!opt.emit_graph.empty()) {
            char name[32];
            std::snprintf(name, sizeof name, "trial_%03d.txt", t);
            save_matrix((std::filesystem::path(opt.emit_graph) / name).string(), a);
        }
    });

    std::string csv = "trial,seed,degree_deviation,fiedler_value,nonzero_edges_per_node,elapsed_ms\n";
    double mean_nonzero = 0.0;
    int nonconvergent = 0;
    for (const Row& r : rows) {
        mean_nonzero += r.nonzero_per_node;
        nonconvergent += r.report.dykstra_failures > 0 ? 1 : 0;
        csv += std::to_string(r.report.trial_index) + ',' + std::to_string(r.report.seed) + ',' +
               fmt12(r.degree_deviation) + ',' + fmt12(r.fiedler) + ',' +
               fmt12(r.nonzero_per_node) + ',' + fmt12(r.report.elapsed_ms) + '\n';
    }
    if (opt.trials > 0) mean_nonzero /= opt.trials;
    csv += "# mean_nonzero_edges_per_node " + fmt12(mean_nonzero) + '\n';
    return finish_harness(opt, csv, nonconvergent, opt.trials, out, err);
}

int cmd_hypotest(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.constraints.size() != 2)
        throw std::invalid_argument("hypotest expects two --constraints configs");
    SymMatrix a = resolve_graph_spec(opt.graph);
    ConstraintConfig f1 = load_constraint_config(opt.constraints[0]);
    ConstraintConfig f2 = load_constraint_config(opt.constraints[1]);
    if (f1.n != a.n() || f2.n != a.n())
        throw std::invalid_argument("constraint configs must match the sample graph's size");
    SolverConfig cfg = make_config(opt);

    HypothesisResult res = hypothesis_test(a, f1.sets, f2.sets, cfg);
    out << "score1 " << fmt12(res.score1) << '\n';
    out << "score2 " << fmt12(res.score2) << '\n';
    out << "winner " << res.winner << '\n';
    if (res.tie) err << "tie: scores agree within 1e-6\n";
    if (!opt.out.empty()) {
        save_matrix(opt.out + ".m1.txt", res.m1);
        save_matrix(opt.out + ".m2.txt", res.m2);
    }
    int nonconvergent = (res.dykstra_failures1 > 0 ? 1 : 0) + (res.dykstra_failures2 > 0 ? 1 : 0);
    if (nonconvergent == 2) {
        err << "error: both family solves had projections that missed tolerance\n";
        return kExitNoConverge;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Convex graph invariants: evaluation, relaxations, and experiment harnesses"};
    app.require_subcommand(1);

    CLI::App* inv = app.add_subcommand("invariant", "Evaluate one invariant of a graph");
    inv->add_option("--graph", opt.graph, "graph spec (builtin like cycle:16, or file:PATH)")
        ->required();
    inv->add_option("--name", opt.name,
                    "edges|maxdeg|maxcut|maxcut-sdp|cheeger|stability|motzkin|theta|"
                    "lambda-bound|fiedler|degseq|spectrum")
        ->required();
    inv->add_option("--pattern", opt.pattern, "pattern graph spec (theta, lambda-bound)");
    inv->add_option("--seed", opt.seed, "seed for randomized inner solves (motzkin)");

    CLI::App* dec = app.add_subcommand("deconvolve",
                                       "Split random relabeled sums of two graphs and report "
                                       "per-trial recovery");
    dec->add_option("--g1", opt.g1, "first component graph spec")->required();
    dec->add_option("--g2", opt.g2, "second component graph spec")->required();

    CLI::App* gen = app.add_subcommand("generate",
                                       "Sample graphs from an invariant constraint set by "
                                       "maximizing random linear functionals");
    gen->add_option("--constraints", opt.constraints,
                    "constraint config: preset name or JSON path")
        ->required()
        ->expected(1);
    gen->add_option("--emit-graph", opt.emit_graph, "directory for per-trial graph files");

    CLI::App* hyp = app.add_subcommand("hypotest",
                                       "Score a sample graph against two candidate families");
    hyp->add_option("--graph", opt.graph, "sample graph spec")->required();
    hyp->add_option("--constraints", opt.constraints,
                    "two constraint configs: family 1, then family 2")
        ->required()
        ->expected(2);

    for (CLI::App* sub : {dec, gen}) {
        sub->add_option("--trials", opt.trials, "number of trials")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "master seed; trial t runs with seed^t");
        sub->add_option("--jobs", opt.jobs, "worker pool size (0 = machine parallelism)");
    }
    for (CLI::App* sub : {inv, dec, gen, hyp}) {
        sub->add_option("--max-iter", opt.max_iter, "override the gradient iteration cap");
        sub->add_option("--tol", opt.tol, "override the projection feasibility tolerance");
    }
    for (CLI::App* sub : {dec, gen, hyp})
        sub->add_option("--out", opt.out, "write results to this path (atomic)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (inv->parsed()) return cmd_invariant(opt, out);
        if (dec->parsed()) return cmd_deconvolve(opt, out, err);
        if (gen->parsed()) return cmd_generate(opt, out, err);
        return cmd_hypotest(opt, out, err);
    } catch (const too_large_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoConverge;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
}

}  // namespace cvxgraph
