#pragma once

#include <cstdint>

#include "cvxgraph/permutation.hpp"

namespace cvxgraph {

// Deterministic 64-bit generator (splitmix-style update and finalizer).
// Identical seed gives an identical stream on every platform, which is what
// makes trial counts in the experiment harnesses reproducible.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform01();           // [0, 1), 53-bit resolution
    double gaussian();            // unit normal via the polar method
    int uniform_int(int k);       // uniform on {0, ..., k-1}, rejection sampled

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Uniform permutation via Fisher-Yates.
Permutation random_permutation(RngStream& rng, int n);

}  // namespace cvxgraph
