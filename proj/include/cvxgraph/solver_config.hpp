#pragma once

namespace cvxgraph {

// Shared knobs for the first-order solvers.  Defaults are the values every
// documented result was produced with; callers override per field.
struct SolverConfig {
    int max_iter = 5000;            // projected-gradient iteration cap
    double objective_tol = 1e-9;    // stop when the objective is this small / stalls
    double feasibility_tol = 1e-7;  // Dykstra per-set residual target
    int dykstra_max_cycles = 2000;  // cycles before giving up on an intersection
    int restarts = 50;              // multi-start count for nonconvex inner solves
    int conic_max_iter = 20000;     // ADMM iteration cap
    double conic_tol = 1e-6;        // ADMM relative residual target
    bool gaussian_diag = true;      // random functionals include the diagonal
    int generate_iters = 2000;      // ascent steps for generation / hypothesis scoring
    int jobs = 0;                   // 0 = machine parallelism (trial loops only)
};

}  // namespace cvxgraph
