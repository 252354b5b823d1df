#pragma once

#include <cstddef>
#include <vector>

namespace cvxgraph {

// Dense symmetric matrix, row-major n*n storage.  Off-diagonal entries are
// edge weights, diagonal entries node weights.  Symmetry is enforced at
// construction; set() writes both triangles so in-place updates preserve it.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);
    SymMatrix(int n, std::vector<double> entries);

    static SymMatrix identity(int n);
    static SymMatrix ones(int n);  // the all-ones matrix J

    int n() const { return n_; }
    bool empty() const { return n_ == 0; }

    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v);
    void add(int i, int j, double v);

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    // Copies the other triangle over: a_ij <- (a_ij + a_ji)/2.
    void symmetrize();

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);

private:
    int n_ = 0;
    std::vector<double> a_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(double s, SymMatrix a);

// Frobenius inner product sum_ij a_ij b_ij.
double dot(const SymMatrix& a, const SymMatrix& b);
double frob_norm(const SymMatrix& a);
double max_abs(const SymMatrix& a);
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);
std::vector<double> matvec(const SymMatrix& a, const std::vector<double>& x);
std::vector<double> row_sums(const SymMatrix& a);

// Embeds pattern as the top-left block of an n x n matrix, zero elsewhere.
SymMatrix zero_pad(const SymMatrix& pattern, int n);

}  // namespace cvxgraph
