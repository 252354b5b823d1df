#pragma once

#include <vector>

#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

// A permutation of {0, ..., n-1}; map[i] is the image of i.
struct Permutation {
    std::vector<int> map;

    int n() const { return static_cast<int>(map.size()); }
    static Permutation identity(int n);
    Permutation inverse() const;
    // Throws if map is not a bijection on 0..n-1.
    void validate() const;
};

// Relabels: result[i][j] = a[pi(i)][pi(j)].
SymMatrix conjugate(const SymMatrix& a, const Permutation& pi);

}  // namespace cvxgraph
