#include "cvxgraph/majorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cvxgraph {

SortedVector sort_descending(const std::vector<double>& x) {
    SortedVector s;
    s.perm.resize(x.size());
    std::iota(s.perm.begin(), s.perm.end(), 0);
    std::stable_sort(s.perm.begin(), s.perm.end(), [&](int a, int b) { return x[a] > x[b]; });
    s.values.resize(x.size());
    for (size_t k = 0; k < x.size(); ++k) s.values[k] = x[s.perm[k]];
    return s;
}

double distribution_function(const std::vector<double>& x, int k) {
    if (k < 1 || k > static_cast<int>(x.size()))
        throw std::invalid_argument("distribution_function: k out of range");
    std::vector<double> s = x;
    std::partial_sort(s.begin(), s.begin() + k, s.end(), std::greater<double>());
    double g = 0.0;
    for (int i = 0; i < k; ++i) g += s[i];
    return g;
}

double monotone_functional(const std::vector<double>& v, const std::vector<double>& x) {
    if (v.size() != x.size()) throw std::invalid_argument("monotone_functional: size mismatch");
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) throw std::invalid_argument("monotone_functional: v not nonincreasing");
    std::vector<double> s = x;
    std::sort(s.begin(), s.end(), std::greater<double>());
    double r = 0.0;
    for (size_t i = 0; i < s.size(); ++i) r += v[i] * s[i];
    return r;
}

bool majorizes(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorizes: length mismatch");
    std::vector<double> xs = x, ys = y;
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    double gx = 0.0, gy = 0.0;
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        gx += xs[k];
        gy += ys[k];
        if (gx < gy - 1e-12) return false;
    }
    gx += xs.empty() ? 0.0 : xs.back();
    gy += ys.empty() ? 0.0 : ys.back();
    return std::abs(gx - gy) <= 1e-12;
}

std::vector<double> project_simplex(const std::vector<double>& x, double radius) {
    const int n = static_cast<int>(x.size());
    std::vector<double> s = x;
    std::sort(s.begin(), s.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        cum += s[i];
        double t = (cum - radius) / (i + 1);
        if (t < s[i]) {
            tau = t;
            k = i + 1;
        }
    }
    (void)k;
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = std::max(0.0, x[i] - tau);
    return y;
}

std::vector<double> project_permutahedron(const std::vector<double>& x,
                                          const std::vector<double>& b) {
    if (x.size() != b.size()) throw std::invalid_argument("project_permutahedron: length mismatch");
    const int n = static_cast<int>(x.size());
    if (n == 0) return {};

    SortedVector xs = sort_descending(x);
    std::vector<double> bb = b;
    std::sort(bb.begin(), bb.end(), std::greater<double>());

    // Prefix-constrained least squares in the sorted frame.  Blocks carry
    // the constant subtracted from their entries; merging keeps those
    // constants nonincreasing, which is the KKT sign condition.
    struct Block {
        double sum_a, sum_b;
        int len;
        double m() const { return (sum_a - sum_b) / len; }
    };
    std::vector<Block> stack;
    stack.reserve(n);
    for (int i = 0; i < n; ++i) {
        stack.push_back({xs.values[i], bb[i], 1});
        while (stack.size() >= 2 && stack[stack.size() - 2].m() < stack.back().m()) {
            Block t = stack.back();
            stack.pop_back();
            stack.back().sum_a += t.sum_a;
            stack.back().sum_b += t.sum_b;
            stack.back().len += t.len;
        }
    }

    std::vector<double> y(n);
    int pos = 0;
    for (const Block& blk : stack) {
        double m = blk.m();
        for (int i = 0; i < blk.len; ++i, ++pos) y[xs.perm[pos]] = xs.values[pos] - m;
    }
    return y;
}

}  // namespace cvxgraph
