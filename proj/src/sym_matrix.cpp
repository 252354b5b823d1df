#include "cvxgraph/sym_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace cvxgraph {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymMatrix: n must be >= 1");
    a_.assign(static_cast<size_t>(n) * n, 0.0);
}

SymMatrix::SymMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("SymMatrix: n must be >= 1");
    if (a_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("SymMatrix: entry count does not match n*n");
    for (double v : a_)
        if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix: non-finite entry");
    symmetrize();
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.a_[static_cast<size_t>(i) * n + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::ones(int n) {
    SymMatrix m(n);
    m.a_.assign(static_cast<size_t>(n) * n, 1.0);
    return m;
}

void SymMatrix::set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
}

void SymMatrix::add(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] += v;
    if (i != j) a_[static_cast<size_t>(j) * n_ + i] += v;
}

void SymMatrix::symmetrize() {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            double v = 0.5 * (a_[static_cast<size_t>(i) * n_ + j] + a_[static_cast<size_t>(j) * n_ + i]);
            a_[static_cast<size_t>(i) * n_ + j] = v;
            a_[static_cast<size_t>(j) * n_ + i] = v;
        }
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("SymMatrix: size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("SymMatrix: size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { a += b; return a; }
SymMatrix operator-(SymMatrix a, const SymMatrix& b) { a -= b; return a; }
SymMatrix operator*(double s, SymMatrix a) { a *= s; return a; }

double dot(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("dot: size mismatch");
    const double* pa = a.data();
    const double* pb = b.data();
    size_t m = static_cast<size_t>(a.n()) * a.n();
    double s = 0.0;
    for (size_t k = 0; k < m; ++k) s += pa[k] * pb[k];
    return s;
}

double frob_norm(const SymMatrix& a) { return std::sqrt(dot(a, a)); }

double max_abs(const SymMatrix& a) {
    double m = 0.0;
    const double* p = a.data();
    size_t cnt = static_cast<size_t>(a.n()) * a.n();
    for (size_t k = 0; k < cnt; ++k) m = std::max(m, std::fabs(p[k]));
    return m;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("max_abs_diff: size mismatch");
    double m = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    size_t cnt = static_cast<size_t>(a.n()) * a.n();
    for (size_t k = 0; k < cnt; ++k) m = std::max(m, std::fabs(pa[k] - pb[k]));
    return m;
}

std::vector<double> matvec(const SymMatrix& a, const std::vector<double>& x) {
    int n = a.n();
    if (x.size() != static_cast<size_t>(n)) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(n, 0.0);
    const double* p = a.data();
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = p + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> row_sums(const SymMatrix& a) {
    return matvec(a, std::vector<double>(a.n(), 1.0));
}

SymMatrix zero_pad(const SymMatrix& pattern, int n) {
    if (n < pattern.n()) throw std::invalid_argument("zero_pad: n smaller than pattern");
    SymMatrix m(n);
    for (int i = 0; i < pattern.n(); ++i)
        for (int j = 0; j < pattern.n(); ++j)
            m.set(i, j, pattern(i, j));
    return m;
}

}  // namespace cvxgraph
