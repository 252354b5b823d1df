#include "cvxgraph/graph_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cvxgraph {

SymMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> numbers;
    long n = -1;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok;
            if (!(ls >> tok)) continue;  // blank or comment-only line
            try {
                size_t used = 0;
                n = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_matrix: first data line must be the node count");
            }
            if (n < 1) throw std::invalid_argument("parse_matrix: node count must be >= 1");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("parse_matrix: junk after node count");
            continue;
        }
        double v;
        while (ls >> v) numbers.push_back(v);
        std::string bad;
        ls.clear();
        if (ls >> bad) throw std::invalid_argument("parse_matrix: non-numeric token '" + bad + "'");
    }
    if (n < 0) throw std::invalid_argument("parse_matrix: empty input");
    if (numbers.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("parse_matrix: expected " + std::to_string(n * n) +
                                    " entries, got " + std::to_string(numbers.size()));
    for (double v : numbers)
        if (!std::isfinite(v)) throw std::invalid_argument("parse_matrix: non-finite entry");
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (std::fabs(numbers[i * n + j] - numbers[j * n + i]) > 1e-12)
                throw std::invalid_argument("parse_matrix: asymmetric at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
    return SymMatrix(static_cast<int>(n), std::move(numbers));
}

std::string serialize_matrix(const SymMatrix& a) {
    std::ostringstream out;
    out << a.n() << "\n";
    char buf[64];
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
            if (j) out << ' ';
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

SymMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_matrix: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

void atomic_write_text(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write_text: cannot open '" + tmp + "'");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("atomic_write_text: write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

void save_matrix(const std::string& path, const SymMatrix& a) {
    atomic_write_text(path, serialize_matrix(a));
}

}  // namespace cvxgraph
