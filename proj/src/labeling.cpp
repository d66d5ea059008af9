#include "ltat/labeling.hpp"

#include <algorithm>
#include <set>

namespace ltat {

Weight WeightProfile::of(Id id) const {
    auto it = vertex_weight.find(id);
    if (it != vertex_weight.end()) return it->second;
    return edge_weight.at(id);
}

bool is_total_bijection(const Graph& g, const TotalLabeling& f) {
    const int total = g.order() + g.size();
    std::vector<char> used(total + 1, 0);
    auto take = [&](int label) {
        if (label < 1 || label > total || used[label]) return false;
        used[label] = 1;
        return true;
    };
    if (static_cast<int>(f.vertex_label.size()) != g.order()) return false;
    if (static_cast<int>(f.edge_label.size()) != g.size()) return false;
    for (Id v : g.vertices()) {
        auto it = f.vertex_label.find(v);
        if (it == f.vertex_label.end() || !take(it->second)) return false;
    }
    for (const Edge& e : g.edges()) {
        auto it = f.edge_label.find(e.id);
        if (it == f.edge_label.end() || !take(it->second)) return false;
    }
    return true;
}

WeightProfile weight_profile(const Graph& g, const TotalLabeling& f) {
    if (!is_total_bijection(g, f))
        throw error(errc::not_bijective, "weight_profile: labeling is not a bijection onto [1,p+q]");
    WeightProfile wp;
    for (Id v : g.vertices()) {
        Weight w = 0;
        for (Id e : g.incident_edges(v)) w += f.of_edge(e);
        wp.vertex_weight[v] = w;
    }
    for (const Edge& e : g.edges())
        wp.edge_weight[e.id] = static_cast<Weight>(f.of_vertex(e.u)) + f.of_vertex(e.v);
    std::set<Weight> distinct;
    for (const auto& [v, w] : wp.vertex_weight) distinct.insert(w);
    for (const auto& [e, w] : wp.edge_weight) distinct.insert(w);
    wp.distinct_weights.assign(distinct.begin(), distinct.end());
    wp.color_count = static_cast<int>(wp.distinct_weights.size());
    return wp;
}

VerificationReport verify_ltal(const Graph& g, const TotalLabeling& f) {
    VerificationReport report;
    if (!is_admissible(g)) {
        report.violations.push_back({ViolationKind::InadmissibleGraph});
        return report;
    }
    if (!is_total_bijection(g, f)) {
        report.violations.push_back({ViolationKind::NotBijection});
        return report;
    }
    WeightProfile wp = weight_profile(g, f);
    report.color_count = wp.color_count;

    // (i) adjacent vertices
    for (const Edge& e : g.edges())
        if (wp.vertex_weight.at(e.u) == wp.vertex_weight.at(e.v))
            report.violations.push_back({ViolationKind::AdjacentVertices, e.u, e.v});
    // (ii) edges sharing an endpoint; per-vertex iteration visits each
    // adjacent pair exactly once in a simple graph
    for (Id v : g.vertices()) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (wp.edge_weight.at(inc[i]) == wp.edge_weight.at(inc[j]))
                    report.violations.push_back({ViolationKind::AdjacentEdges, inc[i], inc[j]});
    }
    // (iii) incident vertex-edge pairs
    for (Id v : g.vertices())
        for (Id e : g.incident_edges(v))
            if (wp.vertex_weight.at(v) == wp.edge_weight.at(e))
                report.violations.push_back({ViolationKind::IncidentVertexEdge, v, e});

    report.valid = report.violations.empty();
    return report;
}

namespace {

bool is_range_bijection(const std::map<Id, int>& labels, int n) {
    if (static_cast<int>(labels.size()) != n) return false;
    std::vector<char> used(n + 1, 0);
    for (const auto& [id, label] : labels) {
        if (label < 1 || label > n || used[label]) return false;
        used[label] = 1;
    }
    return true;
}

}  // namespace

LocalCheck verify_local_antimagic(const Graph& g, const EdgeOnlyLabeling& f) {
    if (!is_range_bijection(f.edge_label, g.size()))
        throw error(errc::not_bijective, "edge labeling is not a bijection onto [1,q]");
    std::map<Id, Weight> sum;
    for (Id v : g.vertices()) {
        Weight w = 0;
        for (Id e : g.incident_edges(v)) w += f.edge_label.at(e);
        sum[v] = w;
    }
    LocalCheck check;
    check.ok = true;
    for (const Edge& e : g.edges())
        if (sum.at(e.u) == sum.at(e.v)) check.ok = false;
    std::set<Weight> distinct;
    for (const auto& [v, w] : sum) distinct.insert(w);
    check.color_count = static_cast<int>(distinct.size());
    return check;
}

LocalCheck verify_local_edge_antimagic(const Graph& g, const VertexOnlyLabeling& h) {
    if (!is_range_bijection(h.vertex_label, g.order()))
        throw error(errc::not_bijective, "vertex labeling is not a bijection onto [1,p]");
    std::map<Id, Weight> sum;
    for (const Edge& e : g.edges())
        sum[e.id] = static_cast<Weight>(h.vertex_label.at(e.u)) + h.vertex_label.at(e.v);
    LocalCheck check;
    check.ok = true;
    for (Id v : g.vertices()) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (sum.at(inc[i]) == sum.at(inc[j])) check.ok = false;
    }
    std::set<Weight> distinct;
    for (const auto& [e, w] : sum) distinct.insert(w);
    check.color_count = static_cast<int>(distinct.size());
    return check;
}

TotalLabeling compose_total(const Graph& g, const EdgeOnlyLabeling& f,
                            const VertexOnlyLabeling& h) {
    if (!verify_local_antimagic(g, f).ok)
        throw error(errc::composition_precondition_failed, "f is not local antimagic");
    if (!verify_local_edge_antimagic(g, h).ok)
        throw error(errc::composition_precondition_failed, "h is not local edge antimagic");

    DegreeStats st = degree_stats(g);
    if (st.min_degree < 1)
        throw error(errc::composition_precondition_failed, "graph has an isolated vertex");
    if (st.min_degree == 1) {
        // delta = 1 side condition: e_p > v_p + k - 2 and f puts the
        // non-pendant edge labels in [1, e_p]
        int k = 0;
        for (Id v : g.vertices())
            if (g.degree(v) == 1) ++k;
        int v_p = g.order() - k;
        int e_p = g.size() - st.pendant_edge_count;
        if (!(e_p > v_p + k - 2))
            throw error(errc::composition_precondition_failed,
                        "delta=1 case requires e_p > v_p + k - 2");
        for (const Edge& e : g.edges()) {
            bool pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
            if (!pendant && f.edge_label.at(e.id) > e_p)
                throw error(errc::composition_precondition_failed,
                            "delta=1 case requires non-pendant edge labels in [1, e_p]");
        }
    }

    TotalLabeling total;
    total.vertex_label = h.vertex_label;
    const int p = g.order();
    for (const auto& [e, label] : f.edge_label) total.edge_label[e] = label + p;
    return total;
}

}  // namespace ltat
