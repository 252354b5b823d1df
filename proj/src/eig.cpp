#include "cvxgraph/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cvxgraph/errors.hpp"

namespace cvxgraph {

namespace {

double offdiag_norm(const std::vector<double>& m, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = m[static_cast<size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

// Cyclic Jacobi sweeps on the flat matrix m, accumulating rotations onto v
// (which may start at any orthonormal basis).  `scale` sets the stopping
// threshold 1e-11 * max(1, scale); m is left near-diagonal.
std::pair<double, int> jacobi_sweeps(std::vector<double>& m, std::vector<double>& v, int n,
                                     double scale) {
    const double stop = 1e-11 * std::max(1.0, scale);
    // Rotations below this leave the off-diagonal norm under stop even if
    // every skipped entry sat at the threshold.
    const double skip = stop / (n > 1 ? n : 1);

    double off = offdiag_norm(m, n);
    int sweep = 0;
    for (; sweep < 100 && off > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[static_cast<size_t>(p) * n + q];
                if (std::fabs(apq) <= skip) continue;
                double app = m[static_cast<size_t>(p) * n + p];
                double aqq = m[static_cast<size_t>(q) * n + q];
                double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::fabs(theta) > 1e154) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                m[static_cast<size_t>(p) * n + p] = app - t * apq;
                m[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                m[static_cast<size_t>(p) * n + q] = 0.0;
                m[static_cast<size_t>(q) * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = m[static_cast<size_t>(r) * n + p];
                    double arq = m[static_cast<size_t>(r) * n + q];
                    double np = arp - s * (arq + tau * arp);
                    double nq = arq + s * (arp - tau * arq);
                    m[static_cast<size_t>(r) * n + p] = np;
                    m[static_cast<size_t>(p) * n + r] = np;
                    m[static_cast<size_t>(r) * n + q] = nq;
                    m[static_cast<size_t>(q) * n + r] = nq;
                }
                for (int r = 0; r < n; ++r) {
                    double vrp = v[static_cast<size_t>(r) * n + p];
                    double vrq = v[static_cast<size_t>(r) * n + q];
                    v[static_cast<size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
                    v[static_cast<size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        off = offdiag_norm(m, n);
    }
    if (off > stop) {
        std::ostringstream msg;
        msg << "eig_sym: no convergence after 100 sweeps, off-diagonal residual " << off;
        throw convergence_error(msg.str());
    }
    return {off, sweep};
}

EigenDecomposition pack_sorted(std::vector<double>& m, std::vector<double>& v, int n, double off,
                               int sweeps) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return m[static_cast<size_t>(x) * n + x] > m[static_cast<size_t>(y) * n + y];
    });

    EigenDecomposition e;
    e.n = n;
    e.off_residual = off;
    e.sweeps = sweeps;
    e.values.resize(n);
    e.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        e.values[k] = m[static_cast<size_t>(order[k]) * n + order[k]];
        for (int i = 0; i < n; ++i)
            e.vectors[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(i) * n + order[k]];
    }
    return e;
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& a) {
    const int n = a.n();
    std::vector<double> m(a.data(), a.data() + static_cast<size_t>(n) * n);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto [off, sweeps] = jacobi_sweeps(m, v, n, frob_norm(a));
    return pack_sorted(m, v, n, off, sweeps);
}

EigenDecomposition eig_sym_warm(const SymMatrix& a, const std::vector<double>& basis) {
    const int n = a.n();
    if (basis.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("eig_sym_warm: basis size does not match operand");
    const double* ad = a.data();

    // m = basis' * a * basis, built via t = a * basis.  The conjugation is
    // orthogonal, so the stopping scale ||a||_F carries over unchanged.
    std::vector<double> t(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* arow = &ad[static_cast<size_t>(i) * n];
        double* trow = &t[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) {
            double aij = arow[j];
            const double* brow = &basis[static_cast<size_t>(j) * n];
            for (int k = 0; k < n; ++k) trow[k] += aij * brow[k];
        }
    }
    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double* brow = &basis[static_cast<size_t>(j) * n];
        const double* trow = &t[static_cast<size_t>(j) * n];
        for (int i = 0; i < n; ++i) {
            double bji = brow[i];
            double* mrow = &m[static_cast<size_t>(i) * n];
            for (int k = 0; k < n; ++k) mrow[k] += bji * trow[k];
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double avg = 0.5 * (m[static_cast<size_t>(i) * n + j] + m[static_cast<size_t>(j) * n + i]);
            m[static_cast<size_t>(i) * n + j] = avg;
            m[static_cast<size_t>(j) * n + i] = avg;
        }

    std::vector<double> v = basis;
    auto [off, sweeps] = jacobi_sweeps(m, v, n, frob_norm(a));
    return pack_sorted(m, v, n, off, sweeps);
}

std::vector<double> spectrum(const SymMatrix& a) { return eig_sym(a).values; }

SymMatrix reconstruct(const EigenDecomposition& e, const std::vector<double>& values) {
    const int n = e.n;
    // Compact to the columns with nonzero weight (rank-r update), with the
    // weights folded into one factor: out = wc * vc', built one dot product
    // per upper-triangle entry.
    int r = 0;
    std::vector<int> cols(n);
    for (int k = 0; k < n; ++k)
        if (values[k] != 0.0) cols[r++] = k;
    std::vector<double> wc(static_cast<size_t>(n) * r), vc(static_cast<size_t>(n) * r);
    for (int i = 0; i < n; ++i) {
        const double* vrow = &e.vectors[static_cast<size_t>(i) * n];
        double* wrow = &wc[static_cast<size_t>(i) * r];
        double* crow = &vc[static_cast<size_t>(i) * r];
        for (int t = 0; t < r; ++t) {
            int k = cols[t];
            wrow[t] = vrow[k] * values[k];
            crow[t] = vrow[k];
        }
    }
    SymMatrix out(n);
    double* od = out.data();
    for (int i = 0; i < n; ++i) {
        const double* wi = &wc[static_cast<size_t>(i) * r];
        for (int j = i; j < n; ++j) {
            const double* vj = &vc[static_cast<size_t>(j) * r];
            double s = 0.0;
            for (int t = 0; t < r; ++t) s += wi[t] * vj[t];
            od[static_cast<size_t>(i) * n + j] = s;
            od[static_cast<size_t>(j) * n + i] = s;
        }
    }
    return out;
}

SymMatrix project_psd(const SymMatrix& a) {
    EigenDecomposition e = eig_sym(a);
    std::vector<double> w = e.values;
    bool clipped = false;
    for (double& x : w)
        if (x < 0.0) {
            x = 0.0;
            clipped = true;
        }
    if (!clipped) return a;
    return reconstruct(e, w);
}

}  // namespace cvxgraph
