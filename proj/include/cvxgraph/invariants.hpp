#pragma once

#include <utility>
#include <vector>

#include "cvxgraph/rng.hpp"
#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

std::vector<double> degree_sequence(const SymMatrix& a);  // sorted row sums, descending
double edge_sum(const SymMatrix& a);                      // sum over i < j
double max_degree(const SymMatrix& a);                    // max_i sum_{j != i} a_ij
double max_abs_node_weight(const SymMatrix& a);
double node_weight_sum(const SymMatrix& a);

// Exact maximum cut, enumeration over 2^(n-1) sign patterns.  n <= 24.
double maxcut_exact(const SymMatrix& a);

// Cheeger constant: min over nonempty U with |U| <= n/2 of cut(U)/|U|.  n <= 20.
double isoperimetric_exact(const SymMatrix& a);

// Stability number of an unweighted graph via branch and bound.  n <= 24.
int stability_exact(const SymMatrix& a);

// Best value of min_{simplex} x^T (I + A) x found by projected gradient from
// the n vertex starts plus `restarts` random starts.  Upper bound on the
// global minimum; equals 1/alpha for unweighted graphs given enough starts.
double motzkin_straus(const SymMatrix& a, int restarts, RngStream& rng);

// Theta_P(A) = max over permutations of tr(P Pi A Pi^T), enumerated over
// injective placements of P's support.  Requires support k <= 6 with
// n^k <= 1e8, or full-support k = n <= 10.
double theta_exact(const SymMatrix& pattern, const SymMatrix& a);

// Same, also reporting the optimal placement: placement[t] is the vertex
// assigned to the t-th support index of the pattern (lexicographically first
// among ties).  support lists the pattern's support indices in order.
struct ThetaResult {
    double value = 0.0;
    std::vector<int> support;
    std::vector<int> placement;
};
ThetaResult theta_exact_placed(const SymMatrix& pattern, const SymMatrix& a);

// Spectral relaxation of theta: lambda(P)^T lambda(A), both sorted descending.
double lambda_bound(const SymMatrix& pattern, const SymMatrix& a);

double spectral_functional(const std::vector<double>& v, const SymMatrix& a);
double degree_functional(const std::vector<double>& v, const SymMatrix& a);

SymMatrix laplacian(const SymMatrix& a);

// Second-smallest Laplacian eigenvalue; requires nonnegative entries.
double fiedler_value(const SymMatrix& a);

// min of v^T L_X v over unit v orthogonal to the all-ones vector, with the
// minimizing v.  No sign guard; valid for any symmetric X (used by cut oracles
// on iterates that may stray slightly negative).
std::pair<double, std::vector<double>> lambda2_laplacian_pair(const SymMatrix& x);

}  // namespace cvxgraph
