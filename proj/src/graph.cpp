#include "cvxgraph/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cvxgraph {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

int parse_size(const std::string& spec, const std::string& field) {
    try {
        size_t used = 0;
        int v = std::stoi(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("builtin_graph: bad size in spec '" + spec + "'");
    }
}

Graph clebsch() {
    // Vertex i carries the 4-bit label (i&1, i>>1&1, i>>2&1, i>>3&1).
    Graph g{SymMatrix(16), "clebsch"};
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            int d = __builtin_popcount(i ^ j);
            if (d == 1 || d == 4) g.adjacency.set(i, j, 1.0);
        }
    return g;
}

Graph shrikhande() {
    // Vertex 4*x + y is the group element (x, y) of Z4 x Z4.
    Graph g{SymMatrix(16), "shrikhande"};
    const int conn[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (const auto& c : conn) {
                int u = 4 * x + y;
                int v = 4 * ((x + c[0]) % 4) + ((y + c[1]) % 4);
                g.adjacency.set(u, v, 1.0);
            }
    return g;
}

Graph rook4() {
    // Vertices are the cells of a 4x4 board; adjacent iff same row or column.
    Graph g{SymMatrix(16), "rook:4"};
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            if (i / 4 == j / 4 || i % 4 == j % 4) g.adjacency.set(i, j, 1.0);
    return g;
}

}  // namespace

Graph builtin_graph(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& name = parts[0];

    if (name == "clebsch") {
        if (parts.size() != 1) throw std::invalid_argument("builtin_graph: clebsch takes no size");
        return clebsch();
    }
    if (name == "shrikhande") {
        if (parts.size() != 1) throw std::invalid_argument("builtin_graph: shrikhande takes no size");
        return shrikhande();
    }
    if (name == "rook") {
        if (parts.size() != 2 || parse_size(spec, parts[1]) != 4)
            throw std::invalid_argument("builtin_graph: only rook:4 is supported");
        return rook4();
    }
    if (name == "bipartite") {
        if (parts.size() != 3) throw std::invalid_argument("builtin_graph: bipartite takes two sizes");
        int a = parse_size(spec, parts[1]);
        int b = parse_size(spec, parts[2]);
        if (a < 1 || b < 1) throw std::invalid_argument("builtin_graph: bipartite sides must be >= 1");
        Graph g{SymMatrix(a + b), spec};
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j)
                g.adjacency.set(i, j, 1.0);
        return g;
    }

    if (parts.size() != 2) throw std::invalid_argument("builtin_graph: unknown spec '" + spec + "'");
    int k = parse_size(spec, parts[1]);
    if (name == "cycle") {
        if (k < 3) throw std::invalid_argument("builtin_graph: cycle needs k >= 3");
        Graph g{SymMatrix(k), spec};
        for (int i = 0; i < k; ++i) g.adjacency.set(i, (i + 1) % k, 1.0);
        return g;
    }
    if (name == "path") {
        if (k < 1) throw std::invalid_argument("builtin_graph: path needs k >= 1");
        Graph g{SymMatrix(k), spec};
        for (int i = 0; i + 1 < k; ++i) g.adjacency.set(i, i + 1, 1.0);
        return g;
    }
    if (name == "clique") {
        if (k < 1) throw std::invalid_argument("builtin_graph: clique needs k >= 1");
        Graph g{SymMatrix(k), spec};
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                g.adjacency.set(i, j, 1.0);
        return g;
    }
    if (name == "empty") {
        if (k < 1) throw std::invalid_argument("builtin_graph: empty needs k >= 1");
        return Graph{SymMatrix(k), spec};
    }
    throw std::invalid_argument("builtin_graph: unknown spec '" + spec + "'");
}

}  // namespace cvxgraph
