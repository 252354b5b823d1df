#pragma once

#include <vector>

namespace cvxgraph {

// values[k] = x[perm[k]], sorted descending; ties keep original order.
struct SortedVector {
    std::vector<double> values;
    std::vector<int> perm;
};

SortedVector sort_descending(const std::vector<double>& x);

// g_k: sum of the k largest entries, 1 <= k <= n.
double distribution_function(const std::vector<double>& x, int k);

// v^T x-bar for nonincreasing v; equals the maximum of v^T (P x) over
// permutations P.
double monotone_functional(const std::vector<double>& v, const std::vector<double>& x);

// True iff g_k(x) >= g_k(y) - 1e-12 for k < n and |g_n(x) - g_n(y)| <= 1e-12.
bool majorizes(const std::vector<double>& x, const std::vector<double>& y);

// Euclidean projection onto {y : sum y = radius, y >= 0}.
std::vector<double> project_simplex(const std::vector<double>& x, double radius = 1.0);

// Euclidean projection onto the permutahedron P(b) = {y : b majorizes y}.
std::vector<double> project_permutahedron(const std::vector<double>& x,
                                          const std::vector<double>& b);

}  // namespace cvxgraph
