#include "cvxgraph/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cvxgraph/errors.hpp"
#include "cvxgraph/majorization.hpp"
#include "cvxgraph/permutation.hpp"

namespace cvxgraph {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Projected ascent of tr(functional * M) over the intersection: step
// 0.1/||functional||_F, cfg.generate_iters steps from the projection of zero.
SymMatrix ascend(const std::vector<ConstraintSet>& sets, const SymMatrix& functional,
                 const SolverConfig& cfg, int& failures) {
    const int n = functional.n();
    DykstraState state;  // carries eigenbases so spectral projections start warm
    ProjectionReport start = dykstra_project(sets, SymMatrix(n), cfg, &state);
    if (!start.converged) ++failures;
    SymMatrix m = start.point;
    double nf = frob_norm(functional);
    SymMatrix step = functional;
    step *= nf > 0.0 ? 0.1 / nf : 0.1;
    for (int it = 0; it < cfg.generate_iters; ++it) {
        ProjectionReport p = dykstra_project(sets, m + step, cfg, &state);
        if (!p.converged) ++failures;
        m = p.point;
    }
    return m;
}

}  // namespace

SymMatrix round01(const SymMatrix& x) {
    const int n = x.n();
    SymMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) r.set(i, j, x(i, j) > 0.5 ? 1.0 : 0.0);
    return r;
}

DeconvolveResult deconvolve(const SymMatrix& a, const std::vector<ConstraintSet>& c1,
                            const std::vector<ConstraintSet>& c2, const SolverConfig& cfg,
                            const SymMatrix* truth) {
    auto t0 = std::chrono::steady_clock::now();
    DeconvolveResult res;
    TrialReport& rep = res.report;

    SymMatrix half = 0.5 * a;
    DykstraState s1, s2;  // carry eigenbases so spectral projections start warm
    ProjectionReport p1 = dykstra_project(c1, half, cfg, &s1);
    ProjectionReport p2 = dykstra_project(c2, half, cfg, &s2);
    rep.dykstra_failures += !p1.converged + !p2.converged;
    res.a1 = p1.point;
    res.a2 = p2.point;

    int iter = 0;
    for (; iter < cfg.max_iter; ++iter) {
        SymMatrix r = a - res.a1 - res.a2;
        if (0.5 * dot(r, r) <= cfg.objective_tol) break;
        r *= 0.25;
        ProjectionReport q1 = dykstra_project(c1, res.a1 + r, cfg, &s1);
        ProjectionReport q2 = dykstra_project(c2, res.a2 + r, cfg, &s2);
        rep.dykstra_failures += !q1.converged + !q2.converged;
        res.a1 = q1.point;
        res.a2 = q2.point;
    }
    SymMatrix r = a - res.a1 - res.a2;
    rep.objective_value = 0.5 * dot(r, r);
    rep.iterations = iter;

    SymMatrix rounded = round01(res.a1);
    double off_binary = max_abs_diff(res.a1, rounded);
    if (truth) {
        rep.success = off_binary <= 0.1 && max_abs_diff(rounded, *truth) == 0.0;
        rep.recovery_error_inf = max_abs_diff(res.a1, *truth);
        rep.success_rule = "first summand entrywise within 0.1 of {0,1}; rounding equals truth";
    } else {
        rep.success = off_binary <= 0.1;
        rep.recovery_error_inf = off_binary;
        rep.success_rule = "first summand entrywise within 0.1 of {0,1}";
    }
    rep.elapsed_ms = ms_since(t0);
    return res;
}

GenerateResult generate(const std::vector<ConstraintSet>& c, int n, RngStream& rng,
                        const SolverConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && !cfg.gaussian_diag) continue;
            m.set(i, j, rng.gaussian());
        }

    GenerateResult res;
    res.a = ascend(c, m, cfg, res.report.dykstra_failures);
    res.report.iterations = cfg.generate_iters;
    res.report.objective_value = dot(m, res.a);
    res.satisfied.reserve(c.size());
    for (const ConstraintSet& s : c) res.satisfied.push_back(residual(s, res.a) <= 1e-6);
    res.report.success = res.report.dykstra_failures == 0;
    res.report.success_rule = "every intersection projection reached tolerance";
    res.report.elapsed_ms = ms_since(t0);
    return res;
}

HypothesisResult hypothesis_test(const SymMatrix& a, const std::vector<ConstraintSet>& c1,
                                 const std::vector<ConstraintSet>& c2, const SolverConfig& cfg) {
    HypothesisResult res;
    res.m1 = ascend(c1, a, cfg, res.dykstra_failures1);
    res.m2 = ascend(c2, a, cfg, res.dykstra_failures2);
    res.score1 = dot(a, res.m1);
    res.score2 = dot(a, res.m2);
    res.winner = res.score1 >= res.score2 ? 1 : 2;
    res.tie = std::fabs(res.score1 - res.score2) <= 1e-6;
    return res;
}

HullResult hull_membership(const SymMatrix& a, const SymMatrix& x) {
    const int n = a.n();
    if (x.n() != n) throw std::invalid_argument("hull_membership: size mismatch");
    if (n > 5) throw too_large_error("hull_membership: n > 5 (120 extreme points max)");

    std::vector<SymMatrix> ext;
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    do {
        ext.push_back(conjugate(a, Permutation{ids}));
    } while (std::next_permutation(ids.begin(), ids.end()));
    const int k = static_cast<int>(ext.size());

    // Least squares over the hull in weight space: f(w) = w'Gw/2 - b'w + c.
    std::vector<double> gram(static_cast<size_t>(k) * k), b(k);
    for (int i = 0; i < k; ++i) {
        b[i] = dot(ext[i], x);
        for (int j = i; j < k; ++j) {
            double g = dot(ext[i], ext[j]);
            gram[static_cast<size_t>(i) * k + j] = g;
            gram[static_cast<size_t>(j) * k + i] = g;
        }
    }
    auto gram_mul = [&](const std::vector<double>& v) {
        std::vector<double> out(k, 0.0);
        for (int i = 0; i < k; ++i) {
            double s = 0.0;
            const double* row = &gram[static_cast<size_t>(i) * k];
            for (int j = 0; j < k; ++j) s += row[j] * v[j];
            out[i] = s;
        }
        return out;
    };

    // Step size from the largest Gram eigenvalue (power iteration).
    std::vector<double> pv(k, 1.0);
    double lmax = 0.0;
    for (int it = 0; it < 100; ++it) {
        std::vector<double> nv = gram_mul(pv);
        double norm = 0.0;
        for (double v : nv) norm += v * v;
        norm = std::sqrt(norm);
        if (norm <= 1e-300) break;
        lmax = norm;
        for (double& v : nv) v /= norm;
        pv = std::move(nv);
    }
    const double step = lmax > 1e-12 ? 1.0 / (1.02 * lmax) : 0.0;
    const double xx = dot(x, x);

    std::vector<double> w(k, 1.0 / k);
    double best_obj = 1e300;
    int stalled = 0;
    for (int it = 0; it < 100000 && step > 0.0; ++it) {
        std::vector<double> gw = gram_mul(w);
        double wgw = 0.0, wb = 0.0;
        for (int i = 0; i < k; ++i) {
            wgw += w[i] * gw[i];
            wb += w[i] * b[i];
        }
        double obj = 0.5 * wgw - wb + 0.5 * xx;  // = 0.5 ||sum w E - x||^2
        if (obj <= 1e-14) break;
        if (obj < best_obj - 1e-16 * std::max(1.0, best_obj)) {
            best_obj = obj;
            stalled = 0;
        } else if (++stalled >= 300) {
            break;
        }
        std::vector<double> g(k);
        for (int i = 0; i < k; ++i) g[i] = w[i] - step * (gw[i] - b[i]);
        w = project_simplex(g, 1.0);
    }

    HullResult res;
    res.projection = SymMatrix(n);
    for (int i = 0; i < k; ++i) {
        SymMatrix term = ext[i];
        term *= w[i];
        res.projection += term;
    }
    res.separator = x - res.projection;
    res.distance = frob_norm(res.separator);
    res.inside = res.distance <= 1e-6;
    return res;
}

}  // namespace cvxgraph
