// graph.hpp — simple loopless undirected graphs with stable element ids,
// role tags, family builders and structural queries.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltat {

// Vertex and edge ids share one id space per graph, so a tag map keyed by
// id never collides.
using Id = int;

enum class errc {
    invalid_parameter,
    unknown_vertex,
    not_bijective,
    inadmissible_graph,
    composition_precondition_failed,
    extension_spec_invalid,
    not_covered,
    malformed_input,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

struct Edge {
    Id id;
    Id u;
    Id v;
};

class Graph {
public:
    Id add_vertex(std::string tag = {});
    Id add_edge(Id u, Id v, std::string tag = {});

    int order() const { return static_cast<int>(vertices_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Id>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(Id v) const { return vindex_.count(v) != 0; }
    bool has_edge(Id e) const { return eindex_.count(e) != 0; }
    const Edge& edge(Id e) const;

    int degree(Id v) const;
    const std::vector<Id>& incident_edges(Id v) const;  // edge ids
    std::vector<Id> neighbors(Id v) const;
    bool adjacent(Id u, Id v) const;
    Id other_endpoint(Id e, Id v) const;

    std::optional<std::string> tag(Id id) const;
    std::optional<Id> find_tag(std::string_view tag) const;
    void set_tag(Id id, std::string tag);
    const std::unordered_map<Id, std::string>& tags() const { return tags_; }

    // Rebuilds a graph from explicit ids (JSON round-trips).
    static Graph from_elements(const std::vector<Id>& vertices,
                               const std::vector<Edge>& edges,
                               const std::unordered_map<Id, std::string>& tags);

private:
    std::vector<Id> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<Id, int> vindex_;
    std::unordered_map<Id, int> eindex_;
    std::vector<std::vector<Id>> incident_;  // by vertex index
    std::unordered_map<Id, std::string> tags_;
    std::unordered_map<std::string, Id> tag_index_;
    Id next_id_ = 0;
};

// ---- builders ----

// P_n = u_1 u_2 ... u_n with edges e_i = u_i u_{i+1}.
Graph build_path(int n);

// C_n with vertices u_1..u_n cyclically; e_n = u_n u_1.
Graph build_cycle(int n);

// Renumbers element ids injectively; with more than one part, role tags gain
// the component index as first subscript ("u_3" -> "u_{2,3}").
Graph disjoint_union(const std::vector<Graph>& parts);

// G_v(k,s): ks new pendant vertices x_{j,i} joined to v by edges e'_{j,i},
// 1 <= j <= s, 1 <= i <= k.
Graph attach_pendants(const Graph& g, Id v, int k, int s);

// Fan f_n: n triangles sharing hub c.
Graph build_fan(int n);

// f_n(k): fan with k pendant edges on every degree-2 vertex; k <= 2n-3.
Graph build_fan_pendant(int n, int k);

// ---- structural queries ----

enum class ComponentKind { Cycle, Path, Other };

struct ComponentClass {
    ComponentKind kind;
    int order;
    bool operator==(const ComponentClass&) const = default;
};

struct ComponentSummary {
    // (class, multiplicity), sorted by kind then order
    std::vector<std::pair<ComponentClass, int>> classes;

    int multiplicity(ComponentKind kind, int order) const;
    int component_count() const;
};

ComponentSummary classify_components(const Graph& g);

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    int pendant_edge_count = 0;  // edges with a degree-1 endpoint
};

DegreeStats degree_stats(const Graph& g);

// No isolated vertex and no K_2 component.
bool is_admissible(const Graph& g);

}  // namespace ltat
