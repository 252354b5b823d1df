#include "cvxgraph/invariants.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"
#include "cvxgraph/majorization.hpp"

namespace cvxgraph {

std::vector<double> degree_sequence(const SymMatrix& a) {
    std::vector<double> d = row_sums(a);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

double edge_sum(const SymMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) s += a(i, j);
    return s;
}

double max_degree(const SymMatrix& a) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < a.n(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.n(); ++j)
            if (j != i) s += a(i, j);
        best = std::max(best, s);
    }
    return best;
}

double max_abs_node_weight(const SymMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.n(); ++i) m = std::max(m, std::fabs(a(i, i)));
    return m;
}

double node_weight_sum(const SymMatrix& a) {
    double t = 0.0;
    for (int i = 0; i < a.n(); ++i) t += a(i, i);
    return t;
}

double maxcut_exact(const SymMatrix& a) {
    const int n = a.n();
    if (n > 24)
        throw too_large_error("maxcut_exact: n > 24; use the maxcut_sdp upper bound instead");
    if (n == 1) return 0.0;
    // Gray-code walk over sign patterns with vertex 0 pinned to side +1.
    std::vector<int> side(n, 1);
    double cut = 0.0, best = 0.0;
    std::uint32_t prev = 0;
    const std::uint32_t count = 1u << (n - 1);
    for (std::uint32_t g = 1; g < count; ++g) {
        std::uint32_t gray = g ^ (g >> 1);
        int v = __builtin_ctz(gray ^ prev) + 1;
        prev = gray;
        double delta = 0.0;
        for (int u = 0; u < n; ++u)
            if (u != v) delta += (side[u] == side[v]) ? a(v, u) : -a(v, u);
        cut += delta;
        side[v] = -side[v];
        best = std::max(best, cut);
    }
    return best;
}

double isoperimetric_exact(const SymMatrix& a) {
    const int n = a.n();
    if (n > 20) throw too_large_error("isoperimetric_exact: n > 20");
    if (n == 1) throw std::invalid_argument("isoperimetric_exact: needs n >= 2");
    std::vector<char> in(n, 0);
    double cut = 0.0;
    double best = std::numeric_limits<double>::infinity();
    int size = 0;
    std::uint32_t prev = 0;
    const std::uint32_t count = 1u << n;
    for (std::uint32_t g = 1; g < count; ++g) {
        std::uint32_t gray = g ^ (g >> 1);
        int v = __builtin_ctz(gray ^ prev);
        prev = gray;
        double inside = 0.0, outside = 0.0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            (in[u] ? inside : outside) += a(v, u);
        }
        if (!in[v]) {
            cut += outside - inside;
            in[v] = 1;
            ++size;
        } else {
            cut -= outside - inside;
            in[v] = 0;
            --size;
        }
        if (size >= 1 && 2 * size <= n) best = std::min(best, cut / size);
    }
    return best;
}

namespace {

void stability_branch(const std::vector<std::uint32_t>& adj, std::uint32_t candidates,
                      int count, int& best) {
    if (count + __builtin_popcount(candidates) <= best) return;
    if (candidates == 0) {
        best = std::max(best, count);
        return;
    }
    int v = __builtin_ctz(candidates);
    stability_branch(adj, candidates & ~adj[v] & ~(1u << v), count + 1, best);
    stability_branch(adj, candidates & ~(1u << v), count, best);
}

}  // namespace

int stability_exact(const SymMatrix& a) {
    const int n = a.n();
    if (n > 24) throw too_large_error("stability_exact: n > 24");
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 0.0) throw std::invalid_argument("stability_exact: needs an unweighted graph");
        for (int j = i + 1; j < n; ++j) {
            double w = a(i, j);
            if (w != 0.0 && w != 1.0)
                throw std::invalid_argument("stability_exact: needs an unweighted graph");
            if (w == 1.0) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    int best = 0;
    stability_branch(adj, (n == 32 ? ~0u : (1u << n) - 1), 0, best);
    return best;
}

double motzkin_straus(const SymMatrix& a, int restarts, RngStream& rng) {
    const int n = a.n();
    SymMatrix m = a;
    for (int i = 0; i < n; ++i) m.add(i, i, 1.0);  // I + A
    const double eta = 1.0 / (2.0 * std::max(frob_norm(m), 1e-12));

    auto value = [&](const std::vector<double>& x) {
        std::vector<double> mx = matvec(m, x);
        double f = 0.0;
        for (int i = 0; i < n; ++i) f += x[i] * mx[i];
        return f;
    };
    auto descend = [&](std::vector<double> x) {
        for (int it = 0; it < 2000; ++it) {
            std::vector<double> mx = matvec(m, x);
            std::vector<double> step(n);
            for (int i = 0; i < n; ++i) step[i] = x[i] - eta * 2.0 * mx[i];
            std::vector<double> next = project_simplex(step);
            double gm = 0.0;
            for (int i = 0; i < n; ++i) {
                double d = (x[i] - next[i]) / eta;
                gm += d * d;
            }
            x = std::move(next);
            if (std::sqrt(gm) < 1e-10) break;
        }
        return value(x);
    };

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        std::vector<double> x(n, 0.0);
        x[i] = 1.0;
        best = std::min(best, descend(x));
    }
    for (int r = 0; r < restarts; ++r) {
        // Uniform point on the simplex via normalized exponentials.
        std::vector<double> x(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = -std::log(1.0 - rng.uniform01());
            total += x[i];
        }
        for (int i = 0; i < n; ++i) x[i] /= total;
        best = std::min(best, descend(x));
    }
    return best;
}

namespace {

struct ThetaEnum {
    const SymMatrix* pat;
    const SymMatrix* a;
    std::vector<int> support;
    std::vector<int> placement;
    std::vector<char> used;
    std::vector<int> best_placement;
    double best = -std::numeric_limits<double>::infinity();

    void run(int level, double partial) {
        const int k = static_cast<int>(support.size());
        if (level == k) {
            if (partial > best) {
                best = partial;
                best_placement = placement;
            }
            return;
        }
        const int n = a->n();
        const int st = support[level];
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            double add = (*pat)(st, st) * (*a)(v, v);
            for (int u = 0; u < level; ++u)
                add += 2.0 * (*pat)(st, support[u]) * (*a)(v, placement[u]);
            used[v] = 1;
            placement[level] = v;
            run(level + 1, partial + add);
            used[v] = 0;
        }
    }
};

}  // namespace

ThetaResult theta_exact_placed(const SymMatrix& pattern, const SymMatrix& a) {
    if (pattern.n() != a.n())
        throw std::invalid_argument("theta_exact: pattern and graph sizes differ (zero_pad the pattern)");
    const int n = a.n();
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
        bool nz = false;
        for (int j = 0; j < n && !nz; ++j) nz = pattern(i, j) != 0.0;
        if (nz) support.push_back(i);
    }
    const int k = static_cast<int>(support.size());
    bool small_support = k <= 6 && std::pow(static_cast<double>(n), k) <= 1e8;
    bool full_factorial = k == n && n <= 10;
    if (!small_support && !full_factorial)
        throw too_large_error(
            "theta_exact: support " + std::to_string(k) + " on n=" + std::to_string(n) +
            " exceeds the enumeration cap; use lambda_bound or qap_sdp");

    ThetaResult r;
    r.support = support;
    if (k == 0) return r;  // zero pattern

    ThetaEnum e;
    e.pat = &pattern;
    e.a = &a;
    e.support = support;
    e.placement.assign(k, -1);
    e.used.assign(n, 0);
    e.run(0, 0.0);
    r.value = e.best;
    r.placement = e.best_placement;
    return r;
}

double theta_exact(const SymMatrix& pattern, const SymMatrix& a) {
    return theta_exact_placed(pattern, a).value;
}

double lambda_bound(const SymMatrix& pattern, const SymMatrix& a) {
    if (pattern.n() != a.n()) throw std::invalid_argument("lambda_bound: size mismatch");
    std::vector<double> lp = spectrum(pattern);
    std::vector<double> la = spectrum(a);
    double s = 0.0;
    for (size_t i = 0; i < lp.size(); ++i) s += lp[i] * la[i];
    return s;
}

double spectral_functional(const std::vector<double>& v, const SymMatrix& a) {
    return monotone_functional(v, spectrum(a));
}

double degree_functional(const std::vector<double>& v, const SymMatrix& a) {
    return monotone_functional(v, row_sums(a));
}

SymMatrix laplacian(const SymMatrix& a) {
    const int n = a.n();
    std::vector<double> d = row_sums(a);
    SymMatrix l(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l.set(i, j, (i == j ? d[i] : 0.0) - a(i, j));
    return l;
}

std::pair<double, std::vector<double>> lambda2_laplacian_pair(const SymMatrix& x) {
    const int n = x.n();
    SymMatrix l = laplacian(x);
    if (n == 1) return {0.0, std::vector<double>{0.0}};
    // 1 is always a 0-eigenvector of L; shift it out of the way so the
    // smallest remaining eigenpair is the minimum over unit v orthogonal to 1.
    const double c = 2.0 * frob_norm(l) + 1.0;
    SymMatrix b = l;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) b.add(i, j, c / n);
    EigenDecomposition e = eig_sym(b);
    int kmin = n - 1;  // descending order: last is smallest
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = e.vec(i, kmin);
    // Defensive cleanup: remove any all-ones component, renormalize.
    double mean = 0.0;
    for (double t : v) mean += t;
    mean /= n;
    double norm = 0.0;
    for (double& t : v) {
        t -= mean;
        norm += t * t;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
        // Degenerate tie with the shifted all-ones direction; fall back to the
        // next eigenvector.
        for (int i = 0; i < n; ++i) v[i] = e.vec(i, kmin - 1);
        mean = 0.0;
        for (double t : v) mean += t;
        mean /= n;
        norm = 0.0;
        for (double& t : v) {
            t -= mean;
            norm += t * t;
        }
        norm = std::sqrt(norm);
    }
    for (double& t : v) t /= norm;
    std::vector<double> lv = matvec(l, v);
    double val = 0.0;
    for (int i = 0; i < n; ++i) val += v[i] * lv[i];
    return {val, v};
}

double fiedler_value(const SymMatrix& a) {
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a(i, j) < 0.0)
                throw std::invalid_argument("fiedler_value: negative weights");
    return lambda2_laplacian_pair(a).first;
}

}  // namespace cvxgraph
