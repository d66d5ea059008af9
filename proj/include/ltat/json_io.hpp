// json_io.hpp — JSON round-trip for graphs and labelings, DOT export.
#pragma once

#include <string>

#include <json.hpp>

#include "ltat/bounds.hpp"
#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"
#include "ltat/solver.hpp"

namespace ltat {

// {"vertices":[id,...], "edges":[[eid,u,v],...], "tags":{"<id>":"<role>"}}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);  // throws errc::malformed_input

// {"vertex_labels":{"<vid>":n,...}, "edge_labels":{"<eid>":n,...}}
nlohmann::json labeling_to_json(const TotalLabeling& f);
TotalLabeling labeling_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json weight_profile_to_json(const WeightProfile& w);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json solve_result_to_json(const SolveResult& result);

// Every vertex and edge annotated with its tag (if any), label, and weight.
std::string to_dot(const Graph& g, const TotalLabeling* f = nullptr);

// Convenience file helpers (throw errc::malformed_input on unreadable input).
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace ltat
