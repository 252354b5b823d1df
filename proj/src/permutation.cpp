#include "cvxgraph/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace cvxgraph {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation q;
    q.map.assign(map.size(), 0);
    for (int i = 0; i < n(); ++i) q.map[map[i]] = i;
    return q;
}

void Permutation::validate() const {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= n() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
}

SymMatrix conjugate(const SymMatrix& a, const Permutation& pi) {
    if (pi.n() != a.n()) throw std::invalid_argument("conjugate: size mismatch");
    SymMatrix r(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            r.set(i, j, a(pi.map[i], pi.map[j]));
    return r;
}

}  // namespace cvxgraph
