#pragma once

#include <vector>

#include "cvxgraph/conic.hpp"
#include "cvxgraph/solver_config.hpp"
#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

// f(A) = min tr(XA) s.t. X_ii = 1, X PSD.  Concave in A; throws
// convergence_error when the ADMM solve does not reach tolerance.
double maxcut_sdp(const SymMatrix& a, const SolverConfig& cfg = {});

// Upper bound on maxcut_exact: (1'A1 - f(A)) / 4.  Tight for bipartite graphs.
double maxcut_sdp_bound(const SymMatrix& a, const SolverConfig& cfg = {});

// min tr(X(I+A)) s.t. X >= 0 entrywise, X PSD, 1'X1 = 1.  Lower bound on the
// Motzkin-Straus value, hence <= 1/alpha for unweighted graphs.
double stability_sdp(const SymMatrix& a, const SolverConfig& cfg = {});

// Semidefinite upper bound on theta_exact(pattern, a) via the lifted
// assignment variable: maximize tr((A (x) P) Y) over the bordered matrix
// [[1, y'], [y, Y]] PSD with Y >= 0, the off-assignment entries summed to
// zero, and tr(Y) - 2y'1 = -n.  Requires pattern.n() == a.n() <= 10.
struct QapBound {
    double value = 0.0;
    double sigma_ratio = 0.0;  // sigma_2 / sigma_1 of the bordered optimum
    bool rank_one = false;     // sigma_ratio < 1e-6: bound provably equals theta
    int iterations = 0;
};
QapBound qap_sdp(const SymMatrix& pattern, const SymMatrix& a, const SolverConfig& cfg = {});

// Searches for diagonal y with A - diag(y) PSD and sum(y) maximal (that
// maximum equals maxcut_sdp(A) by duality).  feasible is set when
// sum(y) >= alpha - 1e-7; the returned y always satisfies
// lambda_min(A - diag(y)) >= -1e-7.  Runs the inner solve at a tolerance of
// at most 1e-8 because those gates are absolute.
struct DiagonalCertificate {
    bool feasible = false;
    std::vector<double> y;
    double trace = 0.0;       // sum of y
    double lambda_min = 0.0;  // of A - diag(y)
};
DiagonalCertificate maxcut_dual_certificate(const SymMatrix& a, double alpha,
                                            const SolverConfig& cfg = {});

}  // namespace cvxgraph
