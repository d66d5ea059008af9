// labeling.hpp — total labelings, induced weights, and the local total
// antimagic verifier.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ltat/graph.hpp"

namespace ltat {

using Weight = long long;

// Bijection V u E -> [1, p+q]. Ordered maps keep serialization and witness
// comparison deterministic.
struct TotalLabeling {
    std::map<Id, int> vertex_label;
    std::map<Id, int> edge_label;

    int of_vertex(Id v) const { return vertex_label.at(v); }
    int of_edge(Id e) const { return edge_label.at(e); }
    bool operator==(const TotalLabeling&) const = default;
};

// w_f(v) = sum of incident edge labels (v's own label excluded);
// w_f(uv) = f(u) + f(v) (the edge's own label excluded).
struct WeightProfile {
    std::map<Id, Weight> vertex_weight;
    std::map<Id, Weight> edge_weight;
    std::vector<Weight> distinct_weights;  // sorted
    int color_count = 0;

    Weight of(Id id) const;
};

bool is_total_bijection(const Graph& g, const TotalLabeling& f);

WeightProfile weight_profile(const Graph& g, const TotalLabeling& f);

enum class ViolationKind {
    AdjacentVertices,
    AdjacentEdges,
    IncidentVertexEdge,
    NotBijection,
    InadmissibleGraph,
};

struct Violation {
    ViolationKind kind;
    Id a = -1;
    Id b = -1;
    bool operator==(const Violation&) const = default;
};

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations;
    int color_count = 0;  // meaningful only when the labeling is a bijection
};

VerificationReport verify_ltal(const Graph& g, const TotalLabeling& f);

// Edge-only / vertex-only labelings for the chi_la / chi_lea composition.
struct EdgeOnlyLabeling {
    std::map<Id, int> edge_label;  // E -> [1,q]
};

struct VertexOnlyLabeling {
    std::map<Id, int> vertex_label;  // V -> [1,p]
};

struct LocalCheck {
    bool ok = false;
    int color_count = 0;
};

// f^+(u) != f^+(v) for every edge uv, where f^+ sums incident edge labels.
LocalCheck verify_local_antimagic(const Graph& g, const EdgeOnlyLabeling& f);

// h(u)+h(v) distinct on every pair of adjacent edges.
LocalCheck verify_local_edge_antimagic(const Graph& g, const VertexOnlyLabeling& h);

// g(u) = h(u), g(e) = f(e) + p. Requires f local antimagic and h local edge
// antimagic, plus min degree >= 2 or the pendant-edge side condition.
TotalLabeling compose_total(const Graph& g, const EdgeOnlyLabeling& f,
                            const VertexOnlyLabeling& h);

}  // namespace ltat
