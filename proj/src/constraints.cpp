#include "cvxgraph/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cvxgraph/eig.hpp"
#include "cvxgraph/invariants.hpp"
#include "cvxgraph/majorization.hpp"

namespace cvxgraph {

ConstraintSet ConstraintSet::box(double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("box: lo > hi");
    ConstraintSet s;
    s.kind = ConstraintKind::box;
    s.lo = lo;
    s.hi = hi;
    return s;
}

ConstraintSet ConstraintSet::diag_fix(double value) {
    ConstraintSet s;
    s.kind = ConstraintKind::diag_fix;
    s.value = value;
    return s;
}

ConstraintSet ConstraintSet::degree_eq(double value) {
    ConstraintSet s;
    s.kind = ConstraintKind::degree_eq;
    s.value = value;
    return s;
}

ConstraintSet ConstraintSet::degree_cap(double value) {
    ConstraintSet s;
    s.kind = ConstraintKind::degree_cap;
    s.value = value;
    return s;
}

ConstraintSet ConstraintSet::edge_sum_eq(double value) {
    ConstraintSet s;
    s.kind = ConstraintKind::edge_sum_eq;
    s.value = value;
    return s;
}

ConstraintSet ConstraintSet::spectral_hull(const SymMatrix& reference) {
    ConstraintSet s;
    s.kind = ConstraintKind::spectral_hull;
    s.ref_values = spectrum(reference);  // descending
    return s;
}

ConstraintSet ConstraintSet::degree_hull(const SymMatrix& reference) {
    ConstraintSet s;
    s.kind = ConstraintKind::degree_hull;
    s.ref_values = row_sums(reference);
    std::sort(s.ref_values.begin(), s.ref_values.end(), std::greater<double>());
    return s;
}

ConstraintSet ConstraintSet::lambda2_ge(double value) {
    ConstraintSet s;
    s.kind = ConstraintKind::lambda2_ge;
    s.value = value;
    return s;
}

ConstraintSet ConstraintSet::theta_cap(SymMatrix pattern, double bound) {
    ConstraintSet s;
    s.kind = ConstraintKind::theta_cap;
    s.pattern = std::move(pattern);
    s.bound = bound;
    return s;
}

namespace {

void check_hull_size(const ConstraintSet& s, const SymMatrix& x) {
    if (static_cast<int>(s.ref_values.size()) != x.n())
        throw std::invalid_argument("constraint: reference and operand sizes differ");
}

SymMatrix padded_pattern(const ConstraintSet& s, const SymMatrix& x) {
    if (s.pattern.n() > x.n())
        throw std::invalid_argument("theta_cap: pattern larger than operand");
    return s.pattern.n() == x.n() ? s.pattern : zero_pad(s.pattern, x.n());
}

// Largest positive prefix-sum violation of "ref majorizes vals" plus the
// total-sum mismatch; vals must be descending.
double majorization_violation(const std::vector<double>& vals, const std::vector<double>& ref) {
    const int n = static_cast<int>(vals.size());
    double worst = 0.0, pv = 0.0, pr = 0.0;
    for (int k = 0; k < n; ++k) {
        pv += vals[k];
        pr += ref[k];
        if (k + 1 < n) worst = std::max(worst, pv - pr);
    }
    return worst + std::fabs(pv - pr);
}

// Spectral-hull projection/residual with an optional eigenbasis carried
// between calls on nearby operands (cuts Jacobi to a sweep or two).
SymMatrix project_spectral_hull(const ConstraintSet& s, const SymMatrix& x,
                                std::vector<double>* warm) {
    check_hull_size(s, x);
    EigenDecomposition e =
        (warm != nullptr && !warm->empty()) ? eig_sym_warm(x, *warm) : eig_sym(x);
    if (warm != nullptr) *warm = e.vectors;
    return reconstruct(e, project_permutahedron(e.values, s.ref_values));
}

double spectral_hull_residual(const ConstraintSet& s, const SymMatrix& x,
                              std::vector<double>* warm) {
    check_hull_size(s, x);
    EigenDecomposition e =
        (warm != nullptr && !warm->empty()) ? eig_sym_warm(x, *warm) : eig_sym(x);
    if (warm != nullptr) *warm = e.vectors;
    return majorization_violation(e.values, s.ref_values);
}

SymMatrix project_halfspace(const SymMatrix& x, const Cut& cut) {
    double viol = dot(cut.q, x) - cut.beta;
    if (viol <= 0.0) return x;
    SymMatrix y = x;
    SymMatrix step = cut.q;
    step *= viol / dot(cut.q, cut.q);
    y -= step;
    return y;
}

// Halfspace sum over rows in `rows` of (Y 1)_row <= beta.
Cut row_sum_cut(int n, const std::vector<int>& rows, double beta) {
    Cut cut;
    cut.q = SymMatrix(n);
    std::vector<char> in(n, 0);
    for (int r : rows) in[r] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = 0.5 * (in[i] + in[j]);
            if (i == j) v = in[i];
            if (v != 0.0) cut.q.set(i, j, v);
        }
    cut.beta = beta;
    return cut;
}

}  // namespace

double residual(const ConstraintSet& s, const SymMatrix& x) {
    const int n = x.n();
    switch (s.kind) {
        case ConstraintKind::box: {
            double d2 = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double v = x(i, j);
                    double c = std::clamp(v, s.lo, s.hi);
                    d2 += (v - c) * (v - c);
                }
            return std::sqrt(d2);
        }
        case ConstraintKind::diag_fix: {
            double d2 = 0.0;
            for (int i = 0; i < n; ++i) {
                double e = x(i, i) - s.value;
                d2 += e * e;
            }
            return std::sqrt(d2);
        }
        case ConstraintKind::degree_eq:
        case ConstraintKind::edge_sum_eq:
            return frob_norm(x - project(s, x));
        case ConstraintKind::degree_cap: {
            std::vector<double> d = row_sums(x);
            double worst = 0.0;
            for (double di : d) worst = std::max(worst, di - s.value);
            return worst;
        }
        case ConstraintKind::spectral_hull: {
            check_hull_size(s, x);
            return majorization_violation(spectrum(x), s.ref_values);
        }
        case ConstraintKind::degree_hull: {
            check_hull_size(s, x);
            std::vector<double> d = row_sums(x);
            std::sort(d.begin(), d.end(), std::greater<double>());
            return majorization_violation(d, s.ref_values);
        }
        case ConstraintKind::lambda2_ge:
            return std::max(0.0, s.value - lambda2_laplacian_pair(x).first);
        case ConstraintKind::theta_cap:
            return std::max(0.0, theta_exact(padded_pattern(s, x), x) - s.bound);
    }
    throw std::logic_error("residual: unknown kind");
}

SymMatrix project(const ConstraintSet& s, const SymMatrix& x) {
    const int n = x.n();
    switch (s.kind) {
        case ConstraintKind::box: {
            SymMatrix y = x;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) y.set(i, j, std::clamp(x(i, j), s.lo, s.hi));
            return y;
        }
        case ConstraintKind::diag_fix: {
            SymMatrix y = x;
            for (int i = 0; i < n; ++i) y.set(i, i, s.value);
            return y;
        }
        case ConstraintKind::degree_eq: {
            // Y = X + u 1' + 1 u' with n u + (sum u) 1 = -(X1 - value*1).
            std::vector<double> g = row_sums(x);
            for (double& gi : g) gi -= s.value;
            double gs = 0.0;
            for (double gi : g) gs += gi;
            SymMatrix y = x;
            std::vector<double> u(n);
            for (int i = 0; i < n; ++i) u[i] = -g[i] / n + gs / (2.0 * n * n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) y.set(i, j, x(i, j) + u[i] + u[j]);
            return y;
        }
        case ConstraintKind::edge_sum_eq: {
            if (n < 2) throw std::invalid_argument("edge_sum_eq: need n >= 2");
            double shift = (s.value - edge_sum(x)) / (0.5 * n * (n - 1));
            SymMatrix y = x;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) y.set(i, j, x(i, j) + shift);
            return y;
        }
        case ConstraintKind::spectral_hull: {
            check_hull_size(s, x);
            return project_spectral_hull(s, x, nullptr);
        }
        case ConstraintKind::degree_cap:
        case ConstraintKind::degree_hull:
        case ConstraintKind::lambda2_ge:
        case ConstraintKind::theta_cap: {
            std::optional<Cut> cut = cut_oracle(s, x);
            return cut ? project_halfspace(x, *cut) : x;
        }
    }
    throw std::logic_error("project: unknown kind");
}

std::optional<Cut> cut_oracle(const ConstraintSet& s, const SymMatrix& x, double tol) {
    const int n = x.n();
    switch (s.kind) {
        case ConstraintKind::degree_cap: {
            std::vector<double> d = row_sums(x);
            int worst = 0;
            for (int i = 1; i < n; ++i)
                if (d[i] > d[worst]) worst = i;
            if (d[worst] - s.value <= tol) return std::nullopt;
            return row_sum_cut(n, {worst}, s.value);
        }
        case ConstraintKind::degree_hull: {
            check_hull_size(s, x);
            std::vector<double> d = row_sums(x);
            SortedVector ds = sort_descending(d);
            double pv = 0.0, pr = 0.0, total_ref = 0.0;
            for (double r : s.ref_values) total_ref += r;
            double best = 0.0;
            int best_k = 0;
            for (int k = 0; k + 1 < n; ++k) {
                pv += ds.values[k];
                pr += s.ref_values[k];
                if (pv - pr > best) {
                    best = pv - pr;
                    best_k = k + 1;
                }
            }
            double total = pv + (n > 0 ? ds.values[n - 1] : 0.0);
            if (std::fabs(total - total_ref) > best) {
                // Total-sum equality violated harder than any prefix.
                if (std::fabs(total - total_ref) <= tol) return std::nullopt;
                Cut cut;
                cut.q = SymMatrix::ones(n);
                cut.beta = total_ref;
                if (total < total_ref) {
                    cut.q *= -1.0;
                    cut.beta = -total_ref;
                }
                return cut;
            }
            if (best <= tol) return std::nullopt;
            std::vector<int> rows(ds.perm.begin(), ds.perm.begin() + best_k);
            double beta = 0.0;
            for (int k = 0; k < best_k; ++k) beta += s.ref_values[k];
            return row_sum_cut(n, rows, beta);
        }
        case ConstraintKind::lambda2_ge: {
            auto [l2, v] = lambda2_laplacian_pair(x);
            if (s.value - l2 <= tol) return std::nullopt;
            // v' L_Y v >= value for every member; tr form has Q_ij =
            // -(v_i - v_j)^2 / 2 off the diagonal.
            Cut cut;
            cut.q = SymMatrix(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    double d = v[i] - v[j];
                    cut.q.set(i, j, -0.5 * d * d);
                }
            cut.beta = -s.value;
            return cut;
        }
        case ConstraintKind::theta_cap: {
            SymMatrix pat = padded_pattern(s, x);
            ThetaResult th = theta_exact_placed(pat, x);
            if (th.value - s.bound <= tol) return std::nullopt;
            const int k = static_cast<int>(th.support.size());
            Cut cut;
            cut.q = SymMatrix(n);
            for (int a = 0; a < k; ++a)
                for (int b = a; b < k; ++b)
                    cut.q.set(th.placement[a], th.placement[b],
                              pat(th.support[a], th.support[b]));
            cut.beta = s.bound;
            return cut;
        }
        default:
            throw std::invalid_argument("cut_oracle: kind has an exact projection");
    }
}

namespace {

bool is_cut_based(ConstraintKind k) {
    return k == ConstraintKind::degree_cap || k == ConstraintKind::degree_hull ||
           k == ConstraintKind::lambda2_ge || k == ConstraintKind::theta_cap;
}

}  // namespace

ProjectionReport dykstra_project(const std::vector<ConstraintSet>& sets, const SymMatrix& x,
                                 const SolverConfig& cfg, DykstraState* state) {
    if (sets.empty()) throw std::invalid_argument("dykstra_project: no sets");
    const size_t m = sets.size();
    ProjectionReport rep;
    rep.point = x;
    std::vector<SymMatrix> corr(m, SymMatrix(x.n()));
    // Per-set eigenbases carried across cycles (and across calls when the
    // caller keeps the state); consecutive operands differ by a
    // correction-sized step, so the previous basis nearly diagonalizes the
    // next operand.
    DykstraState local;
    DykstraState& st = state != nullptr ? *state : local;
    const size_t nn = static_cast<size_t>(x.n()) * x.n();
    if (st.bases.size() != m) st.bases.assign(m, {});
    for (std::vector<double>& b : st.bases)
        if (!b.empty() && b.size() != nn) b.clear();
    std::vector<std::vector<double>>& warm = st.bases;
    // Oracle-tolerance bound on the residual of a cut set whose oracle found
    // nothing to separate; conservative against degree_hull's two checks.
    constexpr double kOracleFeasible = 2e-9;
    std::vector<double> known(m);

    for (int cycle = 1; cycle <= cfg.dykstra_max_cycles; ++cycle) {
        // Sweep shortcuts: the set whose exact projection produced the final
        // point is feasible by construction, and a cut set whose oracle just
        // declined to cut the final point is feasible at oracle tolerance.
        int last_writer = -1;
        std::fill(known.begin(), known.end(), -1.0);
        for (size_t i = 0; i < m; ++i) {
            if (is_cut_based(sets[i].kind)) {
                // The oracle must separate the live iterate; adding a stale
                // correction can park the query on an old tangent halfspace
                // and freeze the whole cycle.  Plain halfspace steps keep
                // every move pointed at the set.
                std::optional<Cut> cut = cut_oracle(sets[i], rep.point);
                if (!cut) {
                    known[i] = kOracleFeasible;
                    continue;
                }
                rep.point = project_halfspace(rep.point, *cut);
                last_writer = -1;
                std::fill(known.begin(), known.end(), -1.0);
                continue;
            }
            // Entrywise kinds get a fused in-place pass (same arithmetic as
            // the generic path below, minus the temporaries).
            if (sets[i].kind == ConstraintKind::box) {
                double* p = rep.point.data();
                double* c = corr[i].data();
                for (size_t t = 0; t < nn; ++t) {
                    double y = p[t] + c[t];
                    double z = std::clamp(y, sets[i].lo, sets[i].hi);
                    c[t] = y - z;
                    p[t] = z;
                }
            } else if (sets[i].kind == ConstraintKind::diag_fix) {
                const int n = rep.point.n();
                double* p = rep.point.data();
                double* c = corr[i].data();
                for (size_t t = 0; t < nn; ++t) {
                    double y = p[t] + c[t];
                    p[t] = y;
                    c[t] = 0.0;
                }
                for (int d = 0; d < n; ++d) {
                    size_t t = static_cast<size_t>(d) * n + d;
                    c[t] = p[t] - sets[i].value;
                    p[t] = sets[i].value;
                }
            } else {
                SymMatrix y = rep.point + corr[i];
                SymMatrix z = sets[i].kind == ConstraintKind::spectral_hull
                                  ? project_spectral_hull(sets[i], y, &warm[i])
                                  : project(sets[i], y);
                corr[i] = y - z;
                rep.point = std::move(z);
            }
            last_writer = static_cast<int>(i);
            std::fill(known.begin(), known.end(), -1.0);
        }
        rep.cycles = cycle;
        double worst = 0.0;
        for (size_t i = 0; i < m; ++i) {
            if (static_cast<int>(i) == last_writer) continue;
            double r;
            if (known[i] >= 0.0)
                r = known[i];
            else if (sets[i].kind == ConstraintKind::spectral_hull)
                r = spectral_hull_residual(sets[i], rep.point, &warm[i]);
            else
                r = residual(sets[i], rep.point);
            worst = std::max(worst, r);
        }
        rep.max_set_residual = worst;
        if (worst <= cfg.feasibility_tol) {
            rep.converged = true;
            return rep;
        }
    }
    return rep;
}

}  // namespace cvxgraph
