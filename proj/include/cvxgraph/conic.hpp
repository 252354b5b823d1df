#pragma once

#include <vector>

#include "cvxgraph/solver_config.hpp"
#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

// min tr(objective * X)  s.t.  tr(constraint_mats[i] * X) = constraint_rhs[i],
//                              X PSD (if psd), X >= 0 entrywise (if nonneg).
// When nonneg is set and nonneg_mask is nonempty, only entries with
// mask != 0 are clamped; an empty mask means every entry.
struct ConicProblem {
    SymMatrix objective;
    std::vector<SymMatrix> constraint_mats;
    std::vector<double> constraint_rhs;
    bool psd = true;
    bool nonneg = false;
    SymMatrix nonneg_mask;  // 0x0 when unused
    // Entries with zero_mask != 0 are pinned to 0 inside the entrywise cone
    // (separable, so the combined projection stays exact).  Lets equality
    // patterns like the QAP off-assignment block converge entrywise instead
    // of through an aggregate affine row.
    SymMatrix zero_mask;  // 0x0 when unused
    // Optional facial reduction: orthonormal columns spanning a subspace
    // known to contain the range of every feasible X.  The PSD cone then
    // projects onto {V R V', R PSD} instead of the full cone, which restores
    // a linear rate on problems whose feasible set sits on a face (all
    // equality-forced null directions are removed every iteration).  Callers
    // must guarantee the face really contains the feasible set; values are
    // unchanged in that case.
    std::vector<std::vector<double>> psd_face;  // empty when unused
};

struct ConicSolution {
    SymMatrix x;
    double objective_value = 0.0;
    double primal_residual = 0.0;  // relative
    double dual_residual = 0.0;    // relative
    int iterations = 0;
    bool converged = false;
};

// Consensus ADMM: one affine-plus-objective block (linear solve against the
// constraint Gram matrix, factored once) and one copy of X per cone with
// closed-form projections.  Penalty starts at 1 and rebalances by factors of
// 2 when the primal/dual residual ratio passes 10.  Returns the best iterate
// with converged=false when conic_max_iter runs out.
ConicSolution admm_solve(const ConicProblem& p, const SolverConfig& cfg = {});

}  // namespace cvxgraph
