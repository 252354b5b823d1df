// Exact and closed-form invariants: values pinned against enumeration,
// closed forms, and the spectral relaxation.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cvxgraph/eig.hpp"
#include "cvxgraph/errors.hpp"
#include "cvxgraph/graph.hpp"
#include "cvxgraph/invariants.hpp"
#include "cvxgraph/permutation.hpp"
#include "cvxgraph/rng.hpp"
#include "doctest.h"

using namespace cvxgraph;

namespace {

SymMatrix random_01_graph(int n, double p, RngStream& rng) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) a.set(i, j, 1.0);
    return a;
}

SymMatrix random_symmetric(int n, RngStream& rng) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, rng.gaussian());
    return a;
}

}  // namespace

TEST_CASE("degree and edge statistics") {
    std::vector<double> d16 = degree_sequence(builtin_graph("cycle:16").adjacency);
    for (double v : d16) CHECK(v == 2.0);
    for (double v : degree_sequence(builtin_graph("clebsch").adjacency)) CHECK(v == 5.0);
    std::vector<double> p3 = degree_sequence(builtin_graph("path:3").adjacency);
    CHECK(p3 == std::vector<double>{2.0, 1.0, 1.0});

    CHECK(edge_sum(builtin_graph("clique:4").adjacency) == 6.0);
    CHECK(max_degree(builtin_graph("cycle:16").adjacency) == 2.0);
    SymMatrix id3 = SymMatrix::identity(3);
    CHECK(node_weight_sum(id3) == 3.0);
    CHECK(max_abs_node_weight(id3) == 1.0);
}

TEST_CASE("maxcut_exact") {
    SymMatrix edge(2);
    edge.set(0, 1, 1.0);
    CHECK(maxcut_exact(edge) == 1.0);
    CHECK(maxcut_exact(builtin_graph("clique:3").adjacency) == 2.0);
    CHECK(maxcut_exact(builtin_graph("cycle:4").adjacency) == 4.0);
    CHECK(maxcut_exact(builtin_graph("cycle:5").adjacency) == 4.0);
    CHECK_THROWS_AS(maxcut_exact(SymMatrix(25)), too_large_error);
}

TEST_CASE("isoperimetric_exact") {
    CHECK(isoperimetric_exact(builtin_graph("cycle:16").adjacency) == doctest::Approx(0.25));
    CHECK(isoperimetric_exact(builtin_graph("clique:4").adjacency) == doctest::Approx(2.0));
    SymMatrix two_edges(4);
    two_edges.set(0, 1, 1.0);
    two_edges.set(2, 3, 1.0);
    CHECK(isoperimetric_exact(two_edges) == 0.0);
    CHECK_THROWS_AS(isoperimetric_exact(SymMatrix(21)), too_large_error);
}

TEST_CASE("stability_exact") {
    CHECK(stability_exact(builtin_graph("empty:5").adjacency) == 5);
    CHECK(stability_exact(builtin_graph("clique:4").adjacency) == 1);
    CHECK(stability_exact(builtin_graph("cycle:5").adjacency) == 2);
    CHECK(stability_exact(builtin_graph("cycle:16").adjacency) == 8);
    SymMatrix w(2);
    w.set(0, 1, 0.5);
    CHECK_THROWS_AS(stability_exact(w), std::invalid_argument);
    CHECK_THROWS_AS(stability_exact(SymMatrix(25)), too_large_error);
}

TEST_CASE("motzkin_straus") {
    RngStream rng(53);
    CHECK(motzkin_straus(builtin_graph("clique:6").adjacency, 10, rng) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(motzkin_straus(builtin_graph("empty:4").adjacency, 10, rng) == doctest::Approx(0.25).epsilon(1e-9));
    double c5 = motzkin_straus(builtin_graph("cycle:5").adjacency, 50, rng);
    CHECK(std::fabs(c5 - 0.5) <= 1e-6);
}

TEST_CASE("theta_exact") {
    SymMatrix k3 = builtin_graph("clique:3").adjacency;
    SymMatrix half = 0.5 * k3;
    CHECK(theta_exact(k3, half) == doctest::Approx(3.0));
    CHECK(theta_exact(k3, k3) == doctest::Approx(6.0));

    SymMatrix c8 = builtin_graph("cycle:8").adjacency;
    CHECK(theta_exact(c8, c8) == doctest::Approx(16.0));
    CHECK(theta_exact(c8, builtin_graph("path:8").adjacency) == doctest::Approx(14.0));

    // Caps: support 7 with n == 30 is out; full support at n == 11 is out.
    SymMatrix big = zero_pad(builtin_graph("clique:7").adjacency, 30);
    CHECK_THROWS_AS(theta_exact(big, SymMatrix(30)), too_large_error);
    SymMatrix full11 = builtin_graph("clique:11").adjacency;
    CHECK_THROWS_AS(theta_exact(full11, SymMatrix(11)), too_large_error);
}

TEST_CASE("theta diagonal pairs with node weights") {
    // P = diag(1) on one support node picks the largest node weight.
    SymMatrix p(3);
    p.set(0, 0, 1.0);
    SymMatrix a(3);
    a.set(0, 0, -1.0);
    a.set(1, 1, 4.0);
    a.set(2, 2, 2.0);
    CHECK(theta_exact(p, a) == doctest::Approx(4.0));
}

TEST_CASE("theta convexity in A") {
    RngStream rng(59);
    SymMatrix p = zero_pad(builtin_graph("clique:3").adjacency, 6);
    for (int t = 0; t < 10; ++t) {
        SymMatrix a = random_symmetric(6, rng), b = random_symmetric(6, rng);
        SymMatrix mid = 0.5 * (a + b);
        CHECK(theta_exact(p, mid) <= 0.5 * (theta_exact(p, a) + theta_exact(p, b)) + 1e-9);
    }
}

TEST_CASE("lambda_bound") {
    SymMatrix c5 = builtin_graph("cycle:5").adjacency;
    CHECK(std::fabs((lambda_bound(c5, c5)) - (10.0)) <= 1e-9);
    CHECK(std::fabs((lambda_bound(c5, c5)) - (theta_exact(c5, c5))) <= 1e-9);
    SymMatrix id5 = SymMatrix::identity(5);
    RngStream rng(61);
    SymMatrix a5 = random_symmetric(5, rng);
    double tr = 0.0;
    for (int i = 0; i < 5; ++i) tr += a5(i, i);
    CHECK(std::fabs((lambda_bound(id5, a5)) - (tr)) <= 1e-9);

    // Dominates theta on random pairs (full-support enumeration as oracle).
    for (int t = 0; t < 50; ++t) {
        SymMatrix p = random_symmetric(6, rng), a = random_symmetric(6, rng);
        CHECK(lambda_bound(p, a) >= theta_exact(p, a) - 1e-9);
    }
}

TEST_CASE("spectral and degree functionals") {
    std::vector<double> top3 = {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(std::fabs((spectral_functional(top3, builtin_graph("clebsch").adjacency)) - (7.0)) <= 1e-9);
    std::vector<double> ones16(16, 1.0);
    SymMatrix cl = builtin_graph("clebsch").adjacency;
    CHECK(std::fabs((spectral_functional(ones16, cl)) - (node_weight_sum(cl))) <= 1e-8);
    CHECK(degree_functional(top3, cl) == doctest::Approx(15.0));
    CHECK_THROWS_AS(spectral_functional(std::vector<double>{0, 1}, SymMatrix(2)), std::invalid_argument);
}

TEST_CASE("laplacian and fiedler") {
    SymMatrix l = laplacian(builtin_graph("clebsch").adjacency);
    for (int i = 0; i < 16; ++i) {
        double s = 0.0;
        for (int j = 0; j < 16; ++j) s += l(i, j);
        CHECK(std::fabs((s) - (0.0)) <= 1e-12);
    }
    CHECK(std::fabs((fiedler_value(builtin_graph("clique:4").adjacency)) - (4.0)) <= 1e-9);
    SymMatrix two_edges(4);
    two_edges.set(0, 1, 1.0);
    two_edges.set(2, 3, 1.0);
    CHECK(std::fabs((fiedler_value(two_edges)) - (0.0)) <= 1e-9);
    double c16 = 2.0 * (1.0 - std::cos(2.0 * M_PI / 16.0));
    CHECK(std::fabs((fiedler_value(builtin_graph("cycle:16").adjacency)) - (c16)) <= 1e-9);
    SymMatrix neg(2);
    neg.set(0, 1, -1.0);
    CHECK_THROWS_AS(fiedler_value(neg), std::invalid_argument);
}

TEST_CASE("cospectral pair separated by theta_K4") {
    SymMatrix shr = builtin_graph("shrikhande").adjacency;
    SymMatrix rook = builtin_graph("rook:4").adjacency;
    std::vector<double> s1 = spectrum(shr), s2 = spectrum(rook);
    for (int i = 0; i < 16; ++i) CHECK(std::fabs(s1[i] - s2[i]) <= 1e-8);

    SymMatrix k4 = zero_pad(builtin_graph("clique:4").adjacency, 16);
    CHECK(theta_exact(k4, rook) == doctest::Approx(12.0));
    CHECK(theta_exact(k4, shr) == doctest::Approx(10.0));  // K4-free: strictly below 12
}

TEST_CASE("permutation invariance of exact invariants") {
    RngStream rng(67);
    for (int t = 0; t < 5; ++t) {
        SymMatrix a = random_01_graph(8, 0.5, rng);
        Permutation p = random_permutation(rng, 8);
        SymMatrix c = conjugate(a, p);
        CHECK(std::fabs((edge_sum(c)) - (edge_sum(a))) <= 1e-9);
        CHECK(std::fabs((max_degree(c)) - (max_degree(a))) <= 1e-9);
        CHECK(std::fabs((maxcut_exact(c)) - (maxcut_exact(a))) <= 1e-9);
        CHECK(std::fabs((isoperimetric_exact(c)) - (isoperimetric_exact(a))) <= 1e-9);
        CHECK(stability_exact(c) == stability_exact(a));
        std::vector<double> da = degree_sequence(a), dc = degree_sequence(c);
        for (int i = 0; i < 8; ++i) CHECK(std::fabs((da[i]) - (dc[i])) <= 1e-9);
        SymMatrix k3 = zero_pad(builtin_graph("clique:3").adjacency, 8);
        CHECK(std::fabs((theta_exact(k3, c)) - (theta_exact(k3, a))) <= 1e-9);
        CHECK(std::fabs((lambda_bound(k3, c)) - (lambda_bound(k3, a))) <= 1e-9);
    }
}
