#pragma once

#include <optional>
#include <vector>

#include "cvxgraph/solver_config.hpp"
#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

enum class ConstraintKind {
    box,            // lo <= X_ij <= hi entrywise
    diag_fix,       // X_ii = value
    degree_eq,      // X 1 = value * 1
    degree_cap,     // (X 1)_i <= value for every row        (cut-based)
    edge_sum_eq,    // sum over i < j of X_ij = value
    spectral_hull,  // spectrum of X majorized by a reference spectrum
    degree_hull,    // sorted row sums majorized by reference (cut-based)
    lambda2_ge,     // second-smallest Laplacian eigenvalue >= value (cut-based)
    theta_cap,      // placement maximum of a pattern <= bound (cut-based)
};

// One permutation-invariant convex set of symmetric matrices.  "Degree"
// always means the full row sum (X 1)_i; combine with diag_fix 0 when the
// off-diagonal degree is meant.  box, diag_fix, degree_eq, edge_sum_eq and
// spectral_hull have exact Euclidean projections; the remaining kinds are
// handled through supporting halfspaces from cut_oracle, and project() for
// them moves onto the most violated halfspace only.
struct ConstraintSet {
    ConstraintKind kind = ConstraintKind::box;
    double lo = 0.0;    // box
    double hi = 1.0;    // box
    double value = 0.0; // diag_fix / degree_eq / degree_cap / edge_sum_eq / lambda2_ge
    double bound = 0.0; // theta_cap
    SymMatrix pattern;  // theta_cap; zero-padded to the operand size on use
    // spectral_hull: reference spectrum, descending.
    // degree_hull: reference row sums, descending.
    std::vector<double> ref_values;

    static ConstraintSet box(double lo = 0.0, double hi = 1.0);
    static ConstraintSet diag_fix(double value);
    static ConstraintSet degree_eq(double value);
    static ConstraintSet degree_cap(double value);
    static ConstraintSet edge_sum_eq(double value);
    static ConstraintSet spectral_hull(const SymMatrix& reference);
    static ConstraintSet degree_hull(const SymMatrix& reference);
    static ConstraintSet lambda2_ge(double value);
    static ConstraintSet theta_cap(SymMatrix pattern, double bound);
};

// Nonnegative violation measure; zero (within solver noise) iff x is in the
// set.  Kinds with exact projections use the Euclidean distance; the hulls
// use the largest positive prefix-sum violation plus the total-sum mismatch;
// lambda2_ge and theta_cap use the eigenvalue / placement-value shortfall.
double residual(const ConstraintSet& s, const SymMatrix& x);

// Exact Euclidean projection for box / diag_fix / degree_eq / edge_sum_eq /
// spectral_hull; for cut-based kinds, projection onto the most violated
// supporting halfspace (identity when none is violated).
SymMatrix project(const ConstraintSet& s, const SymMatrix& x);

// Supporting halfspace tr(Q Y) <= beta holding for every member Y of the set.
struct Cut {
    SymMatrix q;
    double beta = 0.0;
};

// Most violated halfspace at x, or nullopt when residual(s, x) <= tol.
// Only cut-based kinds (degree_cap, degree_hull, lambda2_ge, theta_cap)
// have oracles; other kinds throw.
std::optional<Cut> cut_oracle(const ConstraintSet& s, const SymMatrix& x, double tol = 1e-9);

struct ProjectionReport {
    SymMatrix point;
    int cycles = 0;
    double max_set_residual = 0.0;
    bool converged = false;
};

// Carry-over scratch for repeated projections of nearby points (e.g. the
// iterates of a gradient loop): per-set eigenbases that seed the spectral
// projections, saving the cold Jacobi sweeps of each call's first cycle.
// Purely a speed hint — any orthonormal seed yields the same decomposition
// to tolerance.  Correction terms are NOT carried over: they are duals of
// one specific operand, and reusing them biases the next projection.
struct DykstraState {
    std::vector<std::vector<double>> bases;
};

// Cyclic projections with per-set correction terms on the exact-projection
// kinds; cut-based sets instead take a plain step onto their most-violated
// halfspace at the live iterate each cycle (corrections would pin the oracle
// to stale tangent cuts).  Stops when every residual is at most
// cfg.feasibility_tol or after cfg.dykstra_max_cycles cycles
// (converged=false, best point returned).
ProjectionReport dykstra_project(const std::vector<ConstraintSet>& sets, const SymMatrix& x,
                                 const SolverConfig& cfg = {}, DykstraState* state = nullptr);

}  // namespace cvxgraph
