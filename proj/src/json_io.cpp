#include "ltat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ltat {

using nlohmann::json;

namespace {

int to_int_key(const std::string& key) {
    try {
        size_t used = 0;
        int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw error(errc::malformed_input, "non-integer id key: \"" + key + "\"");
    }
}

const char* violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::AdjacentVertices: return "adjacent_vertices";
        case ViolationKind::AdjacentEdges: return "adjacent_edges";
        case ViolationKind::IncidentVertexEdge: return "incident_vertex_edge";
        case ViolationKind::NotBijection: return "not_bijection";
        case ViolationKind::InadmissibleGraph: return "inadmissible_graph";
    }
    return "?";
}

const char* status_name(SolveResult::Status s) {
    switch (s) {
        case SolveResult::Status::Feasible: return "feasible";
        case SolveResult::Status::Infeasible: return "infeasible";
        case SolveResult::Status::Exact: return "exact";
        case SolveResult::Status::LowerBound: return "lower_bound";
        case SolveResult::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

json graph_to_json(const Graph& g) {
    json j;
    std::vector<Id> vs = g.vertices();
    std::sort(vs.begin(), vs.end());
    j["vertices"] = vs;
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    j["edges"] = json::array();
    for (const Edge& e : es) j["edges"].push_back({e.id, e.u, e.v});
    j["tags"] = json::object();
    std::vector<std::pair<Id, std::string>> tags(g.tags().begin(), g.tags().end());
    std::sort(tags.begin(), tags.end());
    for (const auto& [id, tag] : tags) j["tags"][std::to_string(id)] = tag;
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw error(errc::malformed_input, "graph JSON needs \"vertices\" and \"edges\"");
    std::vector<Id> vertices;
    std::vector<Edge> edges;
    std::unordered_map<Id, std::string> tags;
    try {
        for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Id>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw error(errc::malformed_input, "each edge must be [id, u, v]");
            edges.push_back({e[0].get<Id>(), e[1].get<Id>(), e[2].get<Id>()});
        }
        if (j.contains("tags"))
            for (const auto& [key, value] : j.at("tags").items())
                tags[to_int_key(key)] = value.get<std::string>();
    } catch (const json::exception& ex) {
        throw error(errc::malformed_input, std::string("bad graph JSON: ") + ex.what());
    }
    return Graph::from_elements(vertices, edges, tags);
}

json labeling_to_json(const TotalLabeling& f) {
    json j;
    j["vertex_labels"] = json::object();
    j["edge_labels"] = json::object();
    for (const auto& [v, n] : f.vertex_label) j["vertex_labels"][std::to_string(v)] = n;
    for (const auto& [e, n] : f.edge_label) j["edge_labels"][std::to_string(e)] = n;
    return j;
}

TotalLabeling labeling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertex_labels") || !j.contains("edge_labels"))
        throw error(errc::malformed_input,
                    "labeling JSON needs \"vertex_labels\" and \"edge_labels\"");
    TotalLabeling f;
    try {
        for (const auto& [key, value] : j.at("vertex_labels").items())
            f.vertex_label[to_int_key(key)] = value.get<int>();
        for (const auto& [key, value] : j.at("edge_labels").items())
            f.edge_label[to_int_key(key)] = value.get<int>();
    } catch (const json::exception& ex) {
        throw error(errc::malformed_input, std::string("bad labeling JSON: ") + ex.what());
    }
    return f;
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["valid"] = report.valid;
    j["color_count"] = report.color_count;
    j["violations"] = json::array();
    for (const Violation& v : report.violations)
        j["violations"].push_back({{"kind", violation_name(v.kind)}, {"a", v.a}, {"b", v.b}});
    return j;
}

json weight_profile_to_json(const WeightProfile& w) {
    json j;
    j["vertex_weights"] = json::object();
    j["edge_weights"] = json::object();
    for (const auto& [v, wt] : w.vertex_weight) j["vertex_weights"][std::to_string(v)] = wt;
    for (const auto& [e, wt] : w.edge_weight) j["edge_weights"][std::to_string(e)] = wt;
    j["distinct_weights"] = w.distinct_weights;
    j["color_count"] = w.color_count;
    return j;
}

json bound_report_to_json(const BoundReport& report) {
    json j;
    j["lower"] = report.lower;
    if (report.upper) j["upper"] = *report.upper;
    if (report.exact) j["exact"] = *report.exact;
    j["justifications"] = json::array();
    for (const BoundJustification& bj : report.justifications)
        j["justifications"].push_back({{"rule", bj.rule}, {"bound", bj.bound}});
    return j;
}

json solve_result_to_json(const SolveResult& result) {
    json j;
    j["status"] = status_name(result.status);
    j["chi"] = result.chi;
    j["nodes"] = result.stats.nodes;
    j["prunes"] = result.stats.prunes;
    if (result.witness) j["witness"] = labeling_to_json(*result.witness);
    if (!result.note.empty()) j["note"] = result.note;
    return j;
}

std::string to_dot(const Graph& g, const TotalLabeling* f) {
    WeightProfile w;
    bool with_weights = false;
    if (f && is_total_bijection(g, *f)) {
        w = weight_profile(g, *f);
        with_weights = true;
    }
    std::ostringstream out;
    out << "graph G {\n";
    std::vector<Id> vs = g.vertices();
    std::sort(vs.begin(), vs.end());
    for (Id v : vs) {
        out << "  " << v << " [label=\"";
        if (auto tag = g.tag(v)) out << *tag << "\\n";
        out << "v" << v;
        if (f && f->vertex_label.count(v)) out << "\\nf=" << f->vertex_label.at(v);
        if (with_weights) out << "\\nw=" << w.vertex_weight.at(v);
        out << "\"];\n";
    }
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : es) {
        out << "  " << e.u << " -- " << e.v << " [label=\"";
        if (auto tag = g.tag(e.id)) out << *tag << "\\n";
        out << "e" << e.id;
        if (f && f->edge_label.count(e.id)) out << "\\nf=" << f->edge_label.at(e.id);
        if (with_weights) out << "\\nw=" << w.edge_weight.at(e.id);
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed_input, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw error(errc::malformed_input, path + ": " + ex.what());
    }
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error(errc::malformed_input, "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace ltat
