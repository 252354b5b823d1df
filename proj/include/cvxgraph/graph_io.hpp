#pragma once

#include <string>

#include "cvxgraph/sym_matrix.hpp"

namespace cvxgraph {

// Text format: optional '#' comment lines, a line holding n, then n rows of
// n whitespace-separated decimals.  Asymmetry beyond 1e-12 is rejected.
SymMatrix parse_matrix(const std::string& text);
// 17 significant digits per entry, so parse(serialize(a)) round-trips exactly.
std::string serialize_matrix(const SymMatrix& a);

SymMatrix load_matrix(const std::string& path);
// Writes to a temp file in the same directory, then renames into place.
void save_matrix(const std::string& path, const SymMatrix& a);

// Writes arbitrary text atomically (temp file + rename).
void atomic_write_text(const std::string& path, const std::string& text);

}  // namespace cvxgraph
