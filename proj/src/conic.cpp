#include "cvxgraph/conic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"

namespace cvxgraph {

namespace {

// Cholesky factor of the constraint Gram matrix G_ij = <A_i, A_j>, with a
// diagonal jitter escalated until the factorization goes through (dependent
// constraint rows make G singular; the jittered solve still lands on the
// affine set because the residual equations stay consistent).
class GramSolver {
public:
    explicit GramSolver(const std::vector<SymMatrix>& mats) : m_(static_cast<int>(mats.size())) {
        std::vector<double> g(static_cast<size_t>(m_) * m_);
        double max_diag = 0.0;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= i; ++j) {
                double v = dot(mats[i], mats[j]);
                g[static_cast<size_t>(i) * m_ + j] = v;
                g[static_cast<size_t>(j) * m_ + i] = v;
                if (i == j) max_diag = std::max(max_diag, v);
            }
        double jitter = 0.0;
        for (int attempt = 0; attempt < 10; ++attempt) {
            if (factor(g, jitter)) return;
            jitter = (jitter == 0.0) ? 1e-12 * std::max(1.0, max_diag) : jitter * 100.0;
        }
        throw std::invalid_argument("constraint Gram matrix could not be factored");
    }

    std::vector<double> solve(std::vector<double> rhs) const {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < i; ++j) rhs[i] -= l_[static_cast<size_t>(i) * m_ + j] * rhs[j];
            rhs[i] /= l_[static_cast<size_t>(i) * m_ + i];
        }
        for (int i = m_ - 1; i >= 0; --i) {
            for (int j = i + 1; j < m_; ++j) rhs[i] -= l_[static_cast<size_t>(j) * m_ + i] * rhs[j];
            rhs[i] /= l_[static_cast<size_t>(i) * m_ + i];
        }
        return rhs;
    }

private:
    bool factor(const std::vector<double>& g, double jitter) {
        l_.assign(static_cast<size_t>(m_) * m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = g[static_cast<size_t>(i) * m_ + j] + (i == j ? jitter : 0.0);
                for (int k = 0; k < j; ++k)
                    s -= l_[static_cast<size_t>(i) * m_ + k] * l_[static_cast<size_t>(j) * m_ + k];
                if (i == j) {
                    if (s <= 0.0) return false;
                    l_[static_cast<size_t>(i) * m_ + i] = std::sqrt(s);
                } else {
                    l_[static_cast<size_t>(i) * m_ + j] = s / l_[static_cast<size_t>(j) * m_ + j];
                }
            }
        }
        return true;
    }

    int m_;
    std::vector<double> l_;
};

// Euclidean projection onto {V R V' : R PSD} for orthonormal columns V:
// compress, project the small block, expand.
SymMatrix project_psd_face(const SymMatrix& w, const std::vector<std::vector<double>>& v) {
    const int n = w.n();
    const int d = static_cast<int>(v.size());
    std::vector<std::vector<double>> wv(d);
    for (int c = 0; c < d; ++c) wv[c] = matvec(w, v[c]);
    SymMatrix small(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double s = 0.0;
            for (int a = 0; a < n; ++a) s += v[i][a] * wv[j][a];
            small.set(i, j, s);
        }
    SymMatrix r = project_psd(small);
    std::vector<std::vector<double>> vr(d, std::vector<double>(n, 0.0));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            double rij = r(i, j);
            if (rij == 0.0) continue;
            for (int a = 0; a < n; ++a) vr[j][a] += v[i][a] * rij;
        }
    SymMatrix out(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) s += vr[j][a] * v[j][b];
            out.set(a, b, s);
        }
    return out;
}

void clamp_entrywise(SymMatrix& x, bool nonneg, const SymMatrix& mask, const SymMatrix& zeros) {
    const int n = x.n();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!zeros.empty() && zeros(i, j) != 0.0) {
                x.set(i, j, 0.0);
                continue;
            }
            if (!nonneg) continue;
            if (!mask.empty() && mask(i, j) == 0.0) continue;
            if (x(i, j) < 0.0) x.set(i, j, 0.0);
        }
}

}  // namespace

ConicSolution admm_solve(const ConicProblem& p, const SolverConfig& cfg) {
    const int n = p.objective.n();
    const int m = static_cast<int>(p.constraint_mats.size());
    if (m == 0 || p.constraint_rhs.size() != p.constraint_mats.size())
        throw std::invalid_argument("admm_solve: need matching, nonempty constraint lists");
    for (const SymMatrix& a : p.constraint_mats)
        if (a.n() != n) throw std::invalid_argument("admm_solve: constraint size mismatch");
    const bool entrywise = p.nonneg || !p.zero_mask.empty();
    if (!p.psd && !entrywise) throw std::invalid_argument("admm_solve: at least one cone flag");
    if ((!p.nonneg_mask.empty() && p.nonneg_mask.n() != n) ||
        (!p.zero_mask.empty() && p.zero_mask.n() != n))
        throw std::invalid_argument("admm_solve: mask size mismatch");

    GramSolver gram(p.constraint_mats);
    auto project_affine = [&](const SymMatrix& v) {
        std::vector<double> r(m);
        for (int i = 0; i < m; ++i) r[i] = p.constraint_rhs[i] - dot(p.constraint_mats[i], v);
        std::vector<double> mu = gram.solve(std::move(r));
        SymMatrix x = v;
        for (int i = 0; i < m; ++i) {
            SymMatrix t = p.constraint_mats[i];
            t *= mu[i];
            x += t;
        }
        return x;
    };

    const int k = (p.psd ? 1 : 0) + (entrywise ? 1 : 0);
    SymMatrix x(n);
    std::vector<SymMatrix> z(k, SymMatrix(n)), u(k, SymMatrix(n));
    double rho = 1.0;

    ConicSolution sol;
    for (int iter = 1; iter <= cfg.conic_max_iter; ++iter) {
        SymMatrix v(n);
        for (int c = 0; c < k; ++c) {
            v += z[c];
            v -= u[c];
        }
        v *= 1.0 / k;
        SymMatrix cc = p.objective;
        cc *= 1.0 / (k * rho);
        v -= cc;
        x = project_affine(v);

        const double alpha = 1.6;  // over-relaxation
        double r2 = 0.0, s2 = 0.0;
        for (int c = 0; c < k; ++c) {
            SymMatrix xh = x;
            xh *= alpha;
            SymMatrix zo = z[c];
            zo *= 1.0 - alpha;
            xh += zo;
            SymMatrix w = xh + u[c];
            SymMatrix znew;
            if (c == 0 && p.psd) {
                znew = p.psd_face.empty() ? project_psd(w) : project_psd_face(w, p.psd_face);
            } else {
                znew = w;
                clamp_entrywise(znew, p.nonneg, p.nonneg_mask, p.zero_mask);
            }
            u[c] += xh - znew;
            SymMatrix dp = x - znew;
            r2 += dot(dp, dp);
            SymMatrix dz = znew - z[c];
            s2 += dot(dz, dz);
            z[c] = znew;
        }
        double scale = std::max(1.0, frob_norm(x));
        double rp = std::sqrt(r2) / scale;
        double sd = rho * std::sqrt(s2) / scale;
        sol.iterations = iter;
        sol.primal_residual = rp;
        sol.dual_residual = sd;
        if (rp <= cfg.conic_tol && sd <= cfg.conic_tol) {
            sol.converged = true;
            break;
        }
        if (iter % 25 == 0) {
            if (rp > 10.0 * sd && rho < 1e6) {
                rho *= 2.0;
                for (SymMatrix& uc : u) uc *= 0.5;
            } else if (sd > 10.0 * rp && rho > 1e-6) {
                rho *= 0.5;
                for (SymMatrix& uc : u) uc *= 2.0;
            }
        }
    }
    sol.x = x;
    sol.objective_value = dot(p.objective, x);
    return sol;
}

}  // namespace cvxgraph
