#pragma once

#include <stdexcept>
#include <string>

namespace cvxgraph {

// Thrown when an exact enumeration routine is asked to exceed its size cap.
// The message names the cap and, where one exists, the relaxation to use instead.
struct too_large_error : std::runtime_error {
    explicit too_large_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative routine fails to reach its tolerance within its
// iteration budget.  The message reports the final residual.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvxgraph
