#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvxgraph/constraints.hpp"
#include "cvxgraph/rng.hpp"
#include "cvxgraph/solver_config.hpp"
#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

struct TrialReport {
    int trial_index = 0;
    std::uint64_t seed = 0;
    bool success = false;
    double recovery_error_inf = 0.0;  // entrywise distance to the recovery target
    int iterations = 0;
    double elapsed_ms = 0.0;
    double objective_value = 0.0;
    int dykstra_failures = 0;   // intersection projections that missed tolerance
    std::string success_rule;   // how `success` was decided
};

// Entrywise rounding to {0, 1} at threshold 1/2.
SymMatrix round01(const SymMatrix& x);

struct DeconvolveResult {
    SymMatrix a1;
    SymMatrix a2;
    TrialReport report;
};

// Split a into a1 + a2 with a1 constrained to c1 and a2 to c2: minimizes
// 0.5 * ||a - a1 - a2||_F^2 by simultaneous projected gradient (step 1/4,
// safely under the gradient's Lipschitz constant 2), both halves starting
// from the projection of a/2 onto their sets.  Stops when the objective
// reaches cfg.objective_tol or after cfg.max_iter steps.  Success means a1
// rounds cleanly (entrywise within 0.1 of {0,1}); when `truth` is supplied
// the rounding must also reproduce it exactly.
DeconvolveResult deconvolve(const SymMatrix& a, const std::vector<ConstraintSet>& c1,
                            const std::vector<ConstraintSet>& c2, const SolverConfig& cfg = {},
                            const SymMatrix* truth = nullptr);

struct GenerateResult {
    SymMatrix a;
    TrialReport report;
    std::vector<bool> satisfied;  // per input set: residual <= 1e-6 at the output
};

// Maximizes a random linear functional tr(M A) over the intersection of the
// given sets by projected ascent: M has i.i.d. unit Gaussians on the upper
// triangle (diagonal included iff cfg.gaussian_diag), step 0.1/||M||_F,
// cfg.generate_iters steps from the projection of the zero matrix.
GenerateResult generate(const std::vector<ConstraintSet>& c, int n, RngStream& rng,
                        const SolverConfig& cfg = {});

struct HypothesisResult {
    int winner = 1;       // 1 when score1 >= score2
    bool tie = false;     // |score1 - score2| <= 1e-6
    double score1 = 0.0;  // max tr(a M) over c1
    double score2 = 0.0;
    SymMatrix m1;  // maximizer over c1 (approximates a within that family)
    SymMatrix m2;
    int dykstra_failures1 = 0;
    int dykstra_failures2 = 0;
};

// Which family tracks `a` better: compares max tr(a M) over each family,
// solved by the same projected ascent as generate with functional a.
HypothesisResult hypothesis_test(const SymMatrix& a, const std::vector<ConstraintSet>& c1,
                                 const std::vector<ConstraintSet>& c2,
                                 const SolverConfig& cfg = {});

struct HullResult {
    bool inside = false;
    double distance = 0.0;   // Frobenius distance to the hull of relabelings
    SymMatrix projection;    // nearest convex combination found
    SymMatrix separator;     // x - projection; meaningful when outside
};

// Membership of x in the convex hull of all relabelings of a (n <= 5, so at
// most 120 extreme points): least squares over the hull via simplex-
// constrained projected gradient.  Outside points get a separating
// functional p = x - projection with theta_exact(p, x) > theta_exact(p, a).
HullResult hull_membership(const SymMatrix& a, const SymMatrix& x);

}  // namespace cvxgraph
