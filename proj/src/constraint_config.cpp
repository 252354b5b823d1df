#include "cvxgraph/constraint_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cvxgraph/graph.hpp"
#include "cvxgraph/graph_io.hpp"

namespace cvxgraph {

namespace {

// Regular even-degree graphs with an eigenvalue-gap requirement (degree 8,
// second-smallest Laplacian eigenvalue at least 4) on 40 nodes.
const char* kExpander = R"({
  "n": 40,
  "constraints": [
    {"type": "box"},
    {"type": "diag_zero"},
    {"type": "degree_eq", "value": 8},
    {"type": "lambda2_ge", "value": 4}
  ]
})";

// Degree-2, triangle-free graphs spectrally dominated by the 16-cycle.
const char* kCycleFamily16 = R"({
  "n": 16,
  "constraints": [
    {"type": "box"},
    {"type": "diag_zero"},
    {"type": "degree_eq", "value": 2},
    {"type": "theta_cap", "pattern": "clique:3", "bound": 4},
    {"type": "spectral_hull", "graph": "cycle:16"}
  ]
})";

// Sparse well-connected graphs: degree at most 2.5, Fiedler value at least 1.1.
const char* kConnectedFamily16 = R"({
  "n": 16,
  "constraints": [
    {"type": "box"},
    {"type": "diag_zero"},
    {"type": "degree_cap", "value": 2.5},
    {"type": "lambda2_ge", "value": 1.1}
  ]
})";

double need_number(const nlohmann::json& entry, const char* key) {
    if (!entry.contains(key) || !entry[key].is_number())
        throw std::invalid_argument(std::string("constraint config: missing numeric \"") + key +
                                    "\"");
    return entry[key].get<double>();
}

std::string need_string(const nlohmann::json& entry, const char* key) {
    if (!entry.contains(key) || !entry[key].is_string())
        throw std::invalid_argument(std::string("constraint config: missing string \"") + key +
                                    "\"");
    return entry[key].get<std::string>();
}

}  // namespace

SymMatrix resolve_graph_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return load_matrix(spec.substr(5));
    return builtin_graph(spec).adjacency;
}

ConstraintConfig parse_constraint_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("constraint config: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("constraint config: need integer \"n\"");
    if (!doc.contains("constraints") || !doc["constraints"].is_array())
        throw std::invalid_argument("constraint config: need \"constraints\" array");

    ConstraintConfig cfg;
    cfg.n = doc["n"].get<int>();
    if (cfg.n <= 0) throw std::invalid_argument("constraint config: n must be positive");

    for (const nlohmann::json& entry : doc["constraints"]) {
        if (!entry.is_object() || !entry.contains("type") || !entry["type"].is_string())
            throw std::invalid_argument("constraint config: each constraint needs a \"type\"");
        std::string type = entry["type"].get<std::string>();
        if (type == "box") {
            cfg.sets.push_back(ConstraintSet::box());
        } else if (type == "diag_zero") {
            cfg.sets.push_back(ConstraintSet::diag_fix(0.0));
        } else if (type == "degree_eq") {
            cfg.sets.push_back(ConstraintSet::degree_eq(need_number(entry, "value")));
        } else if (type == "degree_cap") {
            cfg.sets.push_back(ConstraintSet::degree_cap(need_number(entry, "value")));
        } else if (type == "edge_sum_eq") {
            cfg.sets.push_back(ConstraintSet::edge_sum_eq(need_number(entry, "value")));
        } else if (type == "spectral_hull") {
            SymMatrix g = resolve_graph_spec(need_string(entry, "graph"));
            if (g.n() != cfg.n)
                throw std::invalid_argument("constraint config: spectral_hull graph size != n");
            cfg.sets.push_back(ConstraintSet::spectral_hull(g));
        } else if (type == "degree_hull") {
            SymMatrix g = resolve_graph_spec(need_string(entry, "graph"));
            if (g.n() != cfg.n)
                throw std::invalid_argument("constraint config: degree_hull graph size != n");
            cfg.sets.push_back(ConstraintSet::degree_hull(g));
        } else if (type == "lambda2_ge") {
            cfg.sets.push_back(ConstraintSet::lambda2_ge(need_number(entry, "value")));
        } else if (type == "theta_cap") {
            SymMatrix pat = resolve_graph_spec(need_string(entry, "pattern"));
            if (pat.n() > cfg.n)
                throw std::invalid_argument("constraint config: theta_cap pattern larger than n");
            cfg.sets.push_back(ConstraintSet::theta_cap(pat, need_number(entry, "bound")));
        } else {
            throw std::invalid_argument("constraint config: unknown type \"" + type + "\"");
        }
    }
    if (cfg.sets.empty()) throw std::invalid_argument("constraint config: no constraints");
    return cfg;
}

std::string preset_config_text(const std::string& name) {
    if (name == "expander") return kExpander;
    if (name == "cycle-family-16") return kCycleFamily16;
    if (name == "connected-family-16") return kConnectedFamily16;
    return {};
}

ConstraintConfig load_constraint_config(const std::string& name_or_path) {
    std::string preset = preset_config_text(name_or_path);
    if (!preset.empty()) return parse_constraint_config(preset);
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("constraint config: cannot open " + name_or_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_constraint_config(buf.str());
}

}  // namespace cvxgraph
