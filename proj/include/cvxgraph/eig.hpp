#pragma once

#include <vector>

#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

// values sorted descending; vectors is row-major n x n with column k holding
// the unit eigenvector for values[k].
struct EigenDecomposition {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;
    double off_residual = 0.0;  // off-diagonal Frobenius norm at exit
    int sweeps = 0;

    double vec(int i, int k) const { return vectors[static_cast<size_t>(i) * n + k]; }
};

// Cyclic Jacobi; stops when the off-diagonal Frobenius norm falls below
// 1e-11 * max(1, ||A||_F).  Throws convergence_error after 100 sweeps.
EigenDecomposition eig_sym(const SymMatrix& a);

// Same contract as eig_sym, seeded with an orthonormal basis (row-major
// n x n, columns = vectors) expected to nearly diagonalize `a` — e.g. the
// eigenvectors of a nearby matrix.  The input is conjugated by the seed
// before the Jacobi sweeps, so a good seed cuts the sweep count to one or
// two; a poor seed only costs the two extra products.
EigenDecomposition eig_sym_warm(const SymMatrix& a, const std::vector<double>& basis);

// Eigenvalues only, sorted descending.
std::vector<double> spectrum(const SymMatrix& a);

// U diag(values) U^T for the given decomposition.
SymMatrix reconstruct(const EigenDecomposition& e, const std::vector<double>& values);

// Nearest PSD matrix in Frobenius norm (negative eigenvalues clamped to 0).
SymMatrix project_psd(const SymMatrix& a);

}  // namespace cvxgraph
