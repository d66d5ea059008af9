#include "ltat/graph.hpp"

#include <algorithm>
#include <queue>

namespace ltat {

Id Graph::add_vertex(std::string tag) {
    Id id = next_id_++;
    vindex_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back(id);
    incident_.emplace_back();
    if (!tag.empty()) set_tag(id, std::move(tag));
    return id;
}

Id Graph::add_edge(Id u, Id v, std::string tag) {
    if (!has_vertex(u) || !has_vertex(v))
        throw error(errc::unknown_vertex, "add_edge: endpoint not in graph");
    if (u == v) throw error(errc::invalid_parameter, "add_edge: self-loop");
    if (adjacent(u, v)) throw error(errc::invalid_parameter, "add_edge: parallel edge");
    Id id = next_id_++;
    eindex_[id] = static_cast<int>(edges_.size());
    edges_.push_back({id, u, v});
    incident_[vindex_.at(u)].push_back(id);
    incident_[vindex_.at(v)].push_back(id);
    if (!tag.empty()) set_tag(id, std::move(tag));
    return id;
}

const Edge& Graph::edge(Id e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) throw error(errc::invalid_parameter, "unknown edge id");
    return edges_[it->second];
}

int Graph::degree(Id v) const { return static_cast<int>(incident_edges(v).size()); }

const std::vector<Id>& Graph::incident_edges(Id v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw error(errc::unknown_vertex, "unknown vertex id");
    return incident_[it->second];
}

std::vector<Id> Graph::neighbors(Id v) const {
    std::vector<Id> out;
    for (Id e : incident_edges(v)) out.push_back(other_endpoint(e, v));
    return out;
}

bool Graph::adjacent(Id u, Id v) const {
    for (Id e : incident_edges(u))
        if (other_endpoint(e, u) == v) return true;
    return false;
}

Id Graph::other_endpoint(Id e, Id v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw error(errc::invalid_parameter, "vertex not an endpoint of edge");
}

std::optional<std::string> Graph::tag(Id id) const {
    auto it = tags_.find(id);
    if (it == tags_.end()) return std::nullopt;
    return it->second;
}

std::optional<Id> Graph::find_tag(std::string_view tag) const {
    auto it = tag_index_.find(std::string(tag));
    if (it == tag_index_.end()) return std::nullopt;
    return it->second;
}

void Graph::set_tag(Id id, std::string tag) {
    std::string t = std::move(tag);
    // keep tags unique; a clash gets primed
    while (tag_index_.count(t)) t += '\'';
    if (auto old = tags_.find(id); old != tags_.end()) tag_index_.erase(old->second);
    tag_index_[t] = id;
    tags_[id] = std::move(t);
}

Graph Graph::from_elements(const std::vector<Id>& vertices, const std::vector<Edge>& edges,
                           const std::unordered_map<Id, std::string>& tags) {
    Graph g;
    for (Id v : vertices) {
        if (v < 0 || g.vindex_.count(v))
            throw error(errc::malformed_input, "duplicate or negative vertex id");
        g.vindex_[v] = static_cast<int>(g.vertices_.size());
        g.vertices_.push_back(v);
        g.incident_.emplace_back();
        g.next_id_ = std::max(g.next_id_, v + 1);
    }
    for (const Edge& e : edges) {
        if (e.id < 0 || g.vindex_.count(e.id) || g.eindex_.count(e.id))
            throw error(errc::malformed_input, "duplicate or negative edge id");
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
            throw error(errc::malformed_input, "edge endpoint not a vertex");
        if (e.u == e.v) throw error(errc::malformed_input, "self-loop");
        if (g.adjacent(e.u, e.v)) throw error(errc::malformed_input, "parallel edge");
        g.eindex_[e.id] = static_cast<int>(g.edges_.size());
        g.edges_.push_back(e);
        g.incident_[g.vindex_.at(e.u)].push_back(e.id);
        g.incident_[g.vindex_.at(e.v)].push_back(e.id);
        g.next_id_ = std::max(g.next_id_, e.id + 1);
    }
    for (const auto& [id, t] : tags) {
        if (!g.vindex_.count(id) && !g.eindex_.count(id))
            throw error(errc::malformed_input, "tag on unknown element");
        g.set_tag(id, t);
    }
    return g;
}

// ---- builders ----

Graph build_path(int n) {
    if (n < 2) throw error(errc::invalid_parameter, "build_path: n must be >= 2");
    Graph g;
    std::vector<Id> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = g.add_vertex("u_" + std::to_string(i));
    for (int i = 1; i < n; ++i) g.add_edge(u[i - 1], u[i], "e_" + std::to_string(i));
    return g;
}

Graph build_cycle(int n) {
    if (n < 3) throw error(errc::invalid_parameter, "build_cycle: n must be >= 3");
    Graph g;
    std::vector<Id> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = g.add_vertex("u_" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        g.add_edge(u[i - 1], u[i % n], "e_" + std::to_string(i));
    return g;
}

namespace {

// "u_3" -> "u_{ci,3}", "u_{2,3}" -> "u_{ci,2,3}", "c" -> "c_{ci}"
std::string with_component_index(const std::string& tag, int ci) {
    auto pos = tag.rfind('_');
    std::string idx = std::to_string(ci);
    if (pos == std::string::npos) return tag + "_{" + idx + "}";
    std::string head = tag.substr(0, pos);
    std::string sub = tag.substr(pos + 1);
    if (!sub.empty() && sub.front() == '{' && sub.back() == '}')
        sub = sub.substr(1, sub.size() - 2);
    return head + "_{" + idx + "," + sub + "}";
}

}  // namespace

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw error(errc::invalid_parameter, "disjoint_union: empty list");
    if (parts.size() == 1) return parts.front();
    Graph g;
    int ci = 0;
    for (const Graph& part : parts) {
        ++ci;
        std::unordered_map<Id, Id> vmap;
        for (Id v : part.vertices()) {
            std::string t;
            if (auto tg = part.tag(v)) t = with_component_index(*tg, ci);
            vmap[v] = g.add_vertex(std::move(t));
        }
        for (const Edge& e : part.edges()) {
            std::string t;
            if (auto tg = part.tag(e.id)) t = with_component_index(*tg, ci);
            g.add_edge(vmap.at(e.u), vmap.at(e.v), std::move(t));
        }
    }
    return g;
}

Graph attach_pendants(const Graph& g, Id v, int k, int s) {
    if (!g.has_vertex(v)) throw error(errc::unknown_vertex, "attach_pendants: v not in graph");
    if (k < 1 || s < 1) throw error(errc::invalid_parameter, "attach_pendants: k,s must be >= 1");
    Graph h = g;
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= k; ++i) {
            std::string sub = "_{" + std::to_string(j) + "," + std::to_string(i) + "}";
            Id x = h.add_vertex("x" + sub);
            h.add_edge(v, x, "e'" + sub);
        }
    return h;
}

Graph build_fan(int n) {
    if (n < 2) throw error(errc::invalid_parameter, "build_fan: n must be >= 2");
    Graph g;
    Id c = g.add_vertex("c");
    for (int i = 1; i <= n; ++i) {
        std::string is = std::to_string(i);
        Id a = g.add_vertex("u_{" + is + ",1}");
        Id b = g.add_vertex("u_{" + is + ",2}");
        g.add_edge(c, a, "a_{" + is + ",1}");
        g.add_edge(c, b, "a_{" + is + ",2}");
        g.add_edge(a, b, "b_" + is);
    }
    return g;
}

Graph build_fan_pendant(int n, int k) {
    if (n < 2 || k < 1) throw error(errc::invalid_parameter, "build_fan_pendant: need n >= 2, k >= 1");
    if (k > 2 * n - 3) throw error(errc::invalid_parameter, "build_fan_pendant: k must be <= 2n-3");
    Graph g = build_fan(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= 2; ++j) {
            Id u = *g.find_tag("u_{" + std::to_string(i) + "," + std::to_string(j) + "}");
            for (int t = 1; t <= k; ++t) {
                std::string sub = "_{" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(t) + "}";
                Id x = g.add_vertex("x" + sub);
                g.add_edge(u, x, "e'" + sub);
            }
        }
    return g;
}

// ---- structural queries ----

int ComponentSummary::multiplicity(ComponentKind kind, int order) const {
    for (const auto& [cls, mult] : classes)
        if (cls.kind == kind && cls.order == order) return mult;
    return 0;
}

int ComponentSummary::component_count() const {
    int total = 0;
    for (const auto& [cls, mult] : classes) total += mult;
    return total;
}

namespace {

std::vector<std::vector<Id>> connected_components(const Graph& g) {
    std::unordered_map<Id, bool> seen;
    std::vector<std::vector<Id>> comps;
    for (Id start : g.vertices()) {
        if (seen[start]) continue;
        std::vector<Id> comp;
        std::queue<Id> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            Id v = q.front();
            q.pop();
            comp.push_back(v);
            for (Id w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

ComponentSummary classify_components(const Graph& g) {
    ComponentSummary summary;
    std::vector<std::pair<ComponentClass, int>>& classes = summary.classes;
    for (const auto& comp : connected_components(g)) {
        int n = static_cast<int>(comp.size());
        int deg1 = 0, deg2 = 0;
        for (Id v : comp) {
            int d = g.degree(v);
            if (d == 1) ++deg1;
            if (d == 2) ++deg2;
        }
        ComponentClass cls{ComponentKind::Other, n};
        if (n >= 3 && deg2 == n)
            cls.kind = ComponentKind::Cycle;
        else if (n >= 2 && deg1 == 2 && deg1 + deg2 == n)
            cls.kind = ComponentKind::Path;
        bool found = false;
        for (auto& [c, mult] : classes)
            if (c == cls) {
                ++mult;
                found = true;
            }
        if (!found) classes.emplace_back(cls, 1);
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.first.kind != b.first.kind) return a.first.kind < b.first.kind;
        return a.first.order < b.first.order;
    });
    return summary;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats st;
    st.min_degree = g.order() == 0 ? 0 : g.degree(g.vertices().front());
    for (Id v : g.vertices()) {
        int d = g.degree(v);
        st.max_degree = std::max(st.max_degree, d);
        st.min_degree = std::min(st.min_degree, d);
    }
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1) ++st.pendant_edge_count;
    return st;
}

bool is_admissible(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() <= 2) return false;
    return g.order() >= 3;
}

}  // namespace ltat
