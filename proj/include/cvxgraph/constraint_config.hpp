#pragma once

#include <string>
#include <vector>

#include "cvxgraph/constraints.hpp"

namespace cvxgraph {

struct ConstraintConfig {
    int n = 0;
    std::vector<ConstraintSet> sets;
};

// JSON document {"n": int, "constraints": [...]} where each entry is one of
//   {"type":"box"}                     entrywise [0,1]
//   {"type":"diag_zero"}               zero diagonal
//   {"type":"degree_eq","value":r}
//   {"type":"degree_cap","value":r}
//   {"type":"edge_sum_eq","value":r}
//   {"type":"spectral_hull","graph":spec}
//   {"type":"degree_hull","graph":spec}
//   {"type":"lambda2_ge","value":r}
//   {"type":"theta_cap","pattern":spec,"bound":r}
// Graph specs are builtin names ("cycle:16") or "file:PATH".
// Throws std::invalid_argument on malformed documents.
ConstraintConfig parse_constraint_config(const std::string& json_text);

// Resolves a builtin preset name or reads the file at path.
// Presets: "expander", "cycle-family-16", "connected-family-16".
ConstraintConfig load_constraint_config(const std::string& name_or_path);

// The embedded JSON for a builtin preset; empty string when unknown.
std::string preset_config_text(const std::string& name);

// Resolves a graph argument: builtin spec or "file:PATH".
SymMatrix resolve_graph_spec(const std::string& spec);

}  // namespace cvxgraph
