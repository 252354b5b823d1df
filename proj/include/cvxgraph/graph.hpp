#pragma once

#include <string>

#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

struct Graph {
    SymMatrix adjacency;
    std::string name;

    int n() const { return adjacency.n(); }
};

// Builtin constructors, selected by spec string:
//   "cycle:k" (k >= 3), "path:k" (k >= 1), "clique:k", "empty:k",
//   "bipartite:a:b" (complete bipartite), "clebsch", "shrikhande", "rook:4".
// Clebsch is the folded 5-cube on {0,1}^4 (edges where labels differ in
// exactly 1 or exactly 4 coordinates); Shrikhande is the Cayley graph on
// Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph builtin_graph(const std::string& spec);

}  // namespace cvxgraph
