#include "cvxgraph/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"

namespace cvxgraph {

namespace {

ConicSolution solve_or_throw(const ConicProblem& p, const SolverConfig& cfg) {
    ConicSolution sol = admm_solve(p, cfg);
    if (!sol.converged) throw convergence_error("conic solve did not reach tolerance");
    return sol;
}

}  // namespace

double maxcut_sdp(const SymMatrix& a, const SolverConfig& cfg) {
    const int n = a.n();
    ConicProblem p;
    p.objective = a;
    p.psd = true;
    for (int i = 0; i < n; ++i) {
        SymMatrix e(n);
        e.set(i, i, 1.0);
        p.constraint_mats.push_back(e);
        p.constraint_rhs.push_back(1.0);
    }
    return solve_or_throw(p, cfg).objective_value;
}

double maxcut_sdp_bound(const SymMatrix& a, const SolverConfig& cfg) {
    double total = 0.0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) total += a(i, j);
    return 0.25 * (total - maxcut_sdp(a, cfg));
}

double stability_sdp(const SymMatrix& a, const SolverConfig& cfg) {
    const int n = a.n();
    ConicProblem p;
    p.objective = SymMatrix::identity(n) + a;
    p.psd = true;
    p.nonneg = true;
    p.constraint_mats.push_back(SymMatrix::ones(n));
    p.constraint_rhs.push_back(1.0);
    return solve_or_throw(p, cfg).objective_value;
}

QapBound qap_sdp(const SymMatrix& pattern, const SymMatrix& a, const SolverConfig& cfg) {
    const int n = a.n();
    if (pattern.n() != n) throw std::invalid_argument("qap_sdp: size mismatch");
    if (n > 10) throw too_large_error("qap_sdp: n > 10");
    const int big = n * n + 1;
    auto idx = [n](int i, int j) { return 1 + i * n + j; };

    ConicProblem p;
    p.objective = SymMatrix(big);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (idx(k, l) < idx(i, j)) continue;
                    p.objective.set(idx(i, j), idx(k, l), -a(i, k) * pattern(j, l));
                }

    SymMatrix corner(big);
    corner.set(0, 0, 1.0);
    p.constraint_mats.push_back(corner);
    p.constraint_rhs.push_back(1.0);

    // Lifted products pairing two placements that reuse a node or a slot.
    SymMatrix gangster(big);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l)
                if (l != j) gangster.set(idx(i, j), idx(i, l), 1.0);
            for (int k = 0; k < n; ++k)
                if (k != i) gangster.set(idx(i, j), idx(k, j), 1.0);
        }
    p.constraint_mats.push_back(gangster);
    p.constraint_rhs.push_back(0.0);
    p.zero_mask = gangster;  // same entries, pinned one by one in the cone step

    // tr(Y) - 2 y'1 = -n, i.e. each assignment variable squares to itself.
    SymMatrix arrow(big);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            arrow.set(idx(i, j), idx(i, j), 1.0);
            arrow.set(0, idx(i, j), -1.0);
        }
    p.constraint_mats.push_back(arrow);
    p.constraint_rhs.push_back(-static_cast<double>(n));

    p.psd = true;
    p.nonneg = true;
    p.nonneg_mask = SymMatrix(big);
    for (int r = 1; r < big; ++r)
        for (int c = r; c < big; ++c) p.nonneg_mask.set(r, c, 1.0);

    // Every feasible matrix is singular along the 2n-1 directions spanned by
    // (-1, e_i x 1) and (-1, 1 x e_j): the reuse zeros and the diagonal tie
    // force each quadratic form to vanish.  Restricting the cone step to the
    // orthogonal face keeps the optimum and removes the degeneracy that stalls
    // plain splitting at O(1/k).
    SymMatrix bsum(big);
    auto add_outer = [&](const std::vector<double>& v) {
        for (int r = 0; r < big; ++r) {
            if (v[r] == 0.0) continue;
            for (int c = r; c < big; ++c)
                if (v[c] != 0.0) bsum.set(r, c, bsum(r, c) + v[r] * v[c]);
        }
    };
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(big, 0.0);
        v[0] = -1.0;
        for (int j = 0; j < n; ++j) v[idx(i, j)] = 1.0;
        add_outer(v);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<double> v(big, 0.0);
        v[0] = -1.0;
        for (int i = 0; i < n; ++i) v[idx(i, j)] = 1.0;
        add_outer(v);
    }
    EigenDecomposition bd = eig_sym(bsum);
    const double null_tol = 1e-6 * std::max(1.0, bd.values[0]);
    for (int k = 0; k < big; ++k) {
        if (bd.values[k] > null_tol) continue;
        std::vector<double> col(big);
        for (int r = 0; r < big; ++r) col[r] = bd.vec(r, k);
        p.psd_face.push_back(std::move(col));
    }

    // The bound is consumed through absolute gates, so converge well past them.
    SolverConfig local = cfg;
    local.conic_tol = std::min(cfg.conic_tol, 1e-8);
    local.conic_max_iter = std::max(cfg.conic_max_iter, 100000);
    ConicSolution sol = solve_or_throw(p, local);

    QapBound out;
    out.value = -sol.objective_value;
    out.iterations = sol.iterations;
    std::vector<double> sigma = spectrum(sol.x);
    for (double& s : sigma) s = std::fabs(s);
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    out.sigma_ratio = sigma[0] > 0.0 ? sigma[1] / sigma[0] : 0.0;
    out.rank_one = out.sigma_ratio < 1e-6;
    return out;
}

DiagonalCertificate maxcut_dual_certificate(const SymMatrix& a, double alpha,
                                            const SolverConfig& cfg) {
    const int n = a.n();
    // max sum(y) s.t. A - diag(y) PSD  ==  tr(A) - min tr(X) over PSD X with
    // A's off-diagonal entries; the ADMM X iterate matches them exactly, so
    // A - diag(y) with y = diag(A - X) is X itself up to a diagonal shift.
    ConicProblem p;
    p.objective = SymMatrix::identity(n);
    p.psd = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SymMatrix e(n);
            e.set(i, j, 1.0);
            p.constraint_mats.push_back(e);
            p.constraint_rhs.push_back(2.0 * a(i, j));
        }
    if (p.constraint_mats.empty()) {
        // No off-diagonal entries to pin: optimum is X = 0.
        p.constraint_mats.push_back(SymMatrix::identity(n));
        p.constraint_rhs.push_back(0.0);
    }
    SolverConfig tight = cfg;
    tight.conic_tol = std::min(cfg.conic_tol, 1e-8);
    tight.conic_max_iter = std::max(cfg.conic_max_iter, 100000);
    ConicSolution sol = solve_or_throw(p, tight);

    DiagonalCertificate cert;
    cert.y.resize(n);
    std::vector<double> lam = spectrum(sol.x);
    double lam_min = *std::min_element(lam.begin(), lam.end());
    double shift = std::min(lam_min, 0.0);  // lift X until it is PSD exactly
    for (int i = 0; i < n; ++i) cert.y[i] = a(i, i) - sol.x(i, i) + shift;
    cert.trace = 0.0;
    for (double v : cert.y) cert.trace += v;
    cert.lambda_min = lam_min - shift;
    cert.feasible = cert.trace >= alpha - 1e-7;
    if (!cert.feasible) cert.y.clear();
    return cert;
}

}  // namespace cvxgraph
