#include "cvxgraph/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cvxgraph {

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

int RngStream::uniform_int(int k) {
    if (k <= 0) throw std::invalid_argument("uniform_int: k must be positive");
    std::uint64_t uk = static_cast<std::uint64_t>(k);
    std::uint64_t limit = ~0ULL - (~0ULL % uk);
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return static_cast<int>(r % uk);
}

Permutation random_permutation(RngStream& rng, int n) {
    if (n < 1) throw std::invalid_argument("random_permutation: n must be >= 1");
    Permutation p = Permutation::identity(n);
    for (int i = n - 1; i > 0; --i) {
        int j = rng.uniform_int(i + 1);
        std::swap(p.map[i], p.map[j]);
    }
    return p;
}

}  // namespace cvxgraph
