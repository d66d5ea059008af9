#include "ltat/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_map>

#include "ltat/bounds.hpp"

namespace ltat {

namespace {

struct BudgetExceeded {};

using Clock = std::chrono::steady_clock;

// One element of the elimination order: an edge or a vertex, by dense index.
struct Elem {
    bool is_edge;
    int idx;
};

class Search {
public:
    Search(const Graph& g, int t, const SearchBudget& budget)
        : g_(g), t_(t), budget_(budget), start_(Clock::now()) {
        build_indices();
        build_order_and_symmetry();
        const int total = p_ + q_;
        used_.assign(total + 1, 0);
        vlabel_.assign(p_, 0);
        elabel_.assign(q_, 0);
        vsum_.assign(p_, 0);
        vleft_.assign(p_, 0);
        vweight_.assign(p_, 0);
        vdone_.assign(p_, 0);
        esum_.assign(q_, 0);
        eleft_.assign(q_, 2);
        eweight_.assign(q_, 0);
        edone_.assign(q_, 0);
        for (int vi = 0; vi < p_; ++vi) vleft_[vi] = static_cast<int>(vinc_[vi].size());
    }

    bool run() { return dfs(0); }

    TotalLabeling witness() const {
        TotalLabeling f;
        for (int vi = 0; vi < p_; ++vi) f.vertex_label[vids_[vi]] = vlabel_[vi];
        for (int ei = 0; ei < q_; ++ei) f.edge_label[eids_[ei]] = elabel_[ei];
        return f;
    }

    SearchStats stats;

private:
    void build_indices() {
        p_ = g_.order();
        q_ = g_.size();
        vids_ = g_.vertices();
        std::sort(vids_.begin(), vids_.end());
        for (int i = 0; i < p_; ++i) vindex_[vids_[i]] = i;
        for (const Edge& e : g_.edges()) eids_.push_back(e.id);
        std::sort(eids_.begin(), eids_.end());
        vinc_.assign(p_, {});
        vadj_.assign(p_, {});
        ends_.assign(q_, {});
        eadj_.assign(q_, {});
        for (int ei = 0; ei < q_; ++ei) {
            const Edge& e = g_.edge(eids_[ei]);
            int a = vindex_.at(e.u), b = vindex_.at(e.v);
            ends_[ei] = {a, b};
            vinc_[a].push_back(ei);
            vinc_[b].push_back(ei);
            vadj_[a].push_back(b);
            vadj_[b].push_back(a);
        }
        for (int vi = 0; vi < p_; ++vi)
            for (size_t i = 0; i < vinc_[vi].size(); ++i)
                for (size_t j = i + 1; j < vinc_[vi].size(); ++j) {
                    eadj_[vinc_[vi][i]].push_back(vinc_[vi][j]);
                    eadj_[vinc_[vi][j]].push_back(vinc_[vi][i]);
                }
    }

    // Per component: edges in BFS discovery order, then vertices. Symmetry
    // breaking where structure certifies it: cycle rotation/reflection and
    // interchange of identical cycle/path components.
    void build_order_and_symmetry() {
        std::vector<char> vseen(p_, 0);
        struct Comp {
            std::vector<int> verts, edges;
            bool is_cycle = false, is_path = false;
            int anchor_edge = -1;  // interchange representative
        };
        std::vector<Comp> comps;
        for (int start = 0; start < p_; ++start) {
            if (vseen[start]) continue;
            Comp comp;
            std::vector<char> eseen_local(q_, 0);
            std::vector<int> queue{start};
            vseen[start] = 1;
            for (size_t h = 0; h < queue.size(); ++h) {
                int vi = queue[h];
                comp.verts.push_back(vi);
                for (int ei : vinc_[vi]) {
                    if (!eseen_local[ei]) {
                        eseen_local[ei] = 1;
                        comp.edges.push_back(ei);
                    }
                    int w = ends_[ei].first == vi ? ends_[ei].second : ends_[ei].first;
                    if (!vseen[w]) {
                        vseen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
            int deg1 = 0, deg2 = 0;
            for (int vi : comp.verts) {
                size_t d = vinc_[vi].size();
                if (d == 1) ++deg1;
                if (d == 2) ++deg2;
            }
            int n = static_cast<int>(comp.verts.size());
            comp.is_cycle = n >= 3 && deg2 == n;
            comp.is_path = n >= 2 && deg1 == 2 && deg1 + deg2 == n;
            comps.push_back(std::move(comp));
        }

        for (const Comp& comp : comps) {
            for (int ei : comp.edges) order_.push_back({true, ei});
            for (int vi : comp.verts) order_.push_back({false, vi});
        }

        auto add_edge_lt = [&](int a, int b) { edge_lt_.emplace_back(a, b); };

        for (Comp& comp : comps) {
            if (comp.is_cycle) {
                // walk the cycle from its min-index vertex towards the
                // smaller-index neighbor
                int v0 = *std::min_element(comp.verts.begin(), comp.verts.end());
                int n = static_cast<int>(comp.verts.size());
                std::vector<int> cyc;
                int prev = -1, cur = v0;
                for (int step = 0; step < n; ++step) {
                    int chosen_e = -1, chosen_w = -1;
                    for (int ei : vinc_[cur]) {
                        int w = ends_[ei].first == cur ? ends_[ei].second : ends_[ei].first;
                        if (w == prev) continue;
                        if (chosen_w < 0 || w < chosen_w) {
                            chosen_w = w;
                            chosen_e = ei;
                        }
                    }
                    if (step == n - 1) {
                        for (int ei : vinc_[cur]) {
                            int w = ends_[ei].first == cur ? ends_[ei].second : ends_[ei].first;
                            if (w == v0 && std::find(cyc.begin(), cyc.end(), ei) == cyc.end())
                                chosen_e = ei;
                        }
                    }
                    cyc.push_back(chosen_e);
                    prev = cur;
                    cur = ends_[chosen_e].first == cur ? ends_[chosen_e].second
                                                       : ends_[chosen_e].first;
                }
                for (int i = 1; i < n; ++i) add_edge_lt(cyc[0], cyc[i]);
                if (n >= 4) add_edge_lt(cyc[1], cyc[n - 1]);
                comp.anchor_edge = cyc[0];
            } else if (comp.is_path) {
                // either end edge is a valid interchange representative
                int best = -1;
                for (int ei : comp.edges) {
                    bool pend = vinc_[ends_[ei].first].size() == 1 ||
                                vinc_[ends_[ei].second].size() == 1;
                    if (pend && (best < 0 || ei < best)) best = ei;
                }
                comp.anchor_edge = best;
            }
        }

        // interchange of identical cycle/path components
        std::map<std::pair<int, int>, std::vector<int>> groups;  // (kind, order) -> anchors
        for (const Comp& comp : comps) {
            if (comp.anchor_edge < 0) continue;
            int kind = comp.is_cycle ? 0 : 1;
            groups[{kind, static_cast<int>(comp.verts.size())}].push_back(comp.anchor_edge);
        }
        for (auto& [key, anchors] : groups)
            for (size_t i = 0; i + 1 < anchors.size(); ++i)
                add_edge_lt(anchors[i], anchors[i + 1]);

        edge_constraints_.assign(q_, {});
        for (int ci = 0; ci < static_cast<int>(edge_lt_.size()); ++ci) {
            edge_constraints_[edge_lt_[ci].first].push_back(ci);
            edge_constraints_[edge_lt_[ci].second].push_back(ci);
        }
    }

    void tick() {
        ++stats.nodes;
        if (budget_.node_limit > 0 && stats.nodes > budget_.node_limit) throw BudgetExceeded{};
        if (budget_.time_limit_secs > 0 && (stats.nodes & 0x1fff) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start_).count();
            if (secs > budget_.time_limit_secs) throw BudgetExceeded{};
        }
    }

    void add_weight(Weight w) {
        if (++wcount_[w] == 1) ++distinct_;
    }
    void remove_weight(Weight w) {
        if (--wcount_[w] == 0) --distinct_;
    }

    // Returns false on any violated constraint; fully applied either way so
    // undo() is symmetric.
    bool apply(const Elem& el, int label, std::vector<int>& completed) {
        bool ok = true;
        used_[label] = 1;
        if (el.is_edge) {
            elabel_[el.idx] = label;
            for (int vi : {ends_[el.idx].first, ends_[el.idx].second}) {
                vsum_[vi] += label;
                if (--vleft_[vi] == 0) {
                    Weight w = vsum_[vi];
                    vweight_[vi] = w;
                    vdone_[vi] = 1;
                    for (int u : vadj_[vi])
                        if (vdone_[u] && vweight_[u] == w) ok = false;
                    for (int ei : vinc_[vi])
                        if (edone_[ei] && eweight_[ei] == w) ok = false;
                    add_weight(w);
                    completed.push_back(vi);  // vertex completions are >= 0
                }
            }
        } else {
            vlabel_[el.idx] = label;
            for (int ei : vinc_[el.idx]) {
                esum_[ei] += label;
                if (--eleft_[ei] == 0) {
                    Weight w = esum_[ei];
                    eweight_[ei] = w;
                    edone_[ei] = 1;
                    for (int ej : eadj_[ei])
                        if (edone_[ej] && eweight_[ej] == w) ok = false;
                    for (int vi : {ends_[ei].first, ends_[ei].second})
                        if (vdone_[vi] && vweight_[vi] == w) ok = false;
                    add_weight(w);
                    completed.push_back(~ei);  // edge completions encoded as ~ei
                }
            }
        }
        if (distinct_ > t_) ok = false;
        if (ok && el.is_edge)
            for (int ci : edge_constraints_[el.idx]) {
                auto [a, b] = edge_lt_[ci];
                if (elabel_[a] && elabel_[b] && elabel_[a] >= elabel_[b]) ok = false;
            }
        return ok;
    }

    void undo(const Elem& el, int label, const std::vector<int>& completed) {
        for (int c : completed) {
            if (c >= 0) {
                remove_weight(vweight_[c]);
                vdone_[c] = 0;
            } else {
                int ei = ~c;
                remove_weight(eweight_[ei]);
                edone_[ei] = 0;
            }
        }
        if (el.is_edge) {
            for (int vi : {ends_[el.idx].first, ends_[el.idx].second}) {
                vsum_[vi] -= label;
                ++vleft_[vi];
            }
            elabel_[el.idx] = 0;
        } else {
            for (int ei : vinc_[el.idx]) {
                esum_[ei] -= label;
                ++eleft_[ei];
            }
            vlabel_[el.idx] = 0;
        }
        used_[label] = 0;
    }

    bool dfs(size_t pos) {
        if (pos == order_.size()) return true;
        const Elem& el = order_[pos];
        const int total = p_ + q_;
        for (int label = 1; label <= total; ++label) {
            if (used_[label]) continue;
            tick();
            std::vector<int> completed;
            if (apply(el, label, completed)) {
                if (dfs(pos + 1)) return true;
            } else {
                ++stats.prunes;
            }
            undo(el, label, completed);
        }
        return false;
    }

    const Graph& g_;
    int t_;
    SearchBudget budget_;
    Clock::time_point start_;
    int p_ = 0, q_ = 0;
    std::vector<Id> vids_, eids_;
    std::unordered_map<Id, int> vindex_;
    std::vector<std::vector<int>> vinc_, vadj_, eadj_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<Elem> order_;
    std::vector<std::pair<int, int>> edge_lt_;
    std::vector<std::vector<int>> edge_constraints_;
    std::vector<char> used_, vdone_, edone_;
    std::vector<int> vlabel_, elabel_, vleft_, eleft_;
    std::vector<Weight> vsum_, esum_, vweight_, eweight_;
    std::unordered_map<Weight, int> wcount_;
    int distinct_ = 0;
};

}  // namespace

SolveResult exists_ltal_with_colors(const Graph& g, int t, const SearchBudget& budget) {
    if (!is_admissible(g))
        throw error(errc::inadmissible_graph, "exists_ltal_with_colors: graph is not admissible");
    if (t < 1) throw error(errc::invalid_parameter, "exists_ltal_with_colors: t must be >= 1");
    Search search(g, t, budget);
    SolveResult result;
    try {
        bool found = search.run();
        result.status = found ? SolveResult::Status::Feasible : SolveResult::Status::Infeasible;
        if (found) result.witness = search.witness();
    } catch (const BudgetExceeded&) {
        result.status = SolveResult::Status::Inconclusive;
        result.note = "budget exhausted at t=" + std::to_string(t);
    }
    result.stats = search.stats;
    return result;
}

SolveResult solve_chi_lt(const Graph& g, const SearchBudget& budget) {
    BoundReport lb = lower_bound(g);
    const int total = g.order() + g.size();
    SolveResult result;
    for (int t = static_cast<int>(lb.lower); t <= total; ++t) {
        SolveResult step = exists_ltal_with_colors(g, t, budget);
        result.stats.nodes += step.stats.nodes;
        result.stats.prunes += step.stats.prunes;
        if (step.status == SolveResult::Status::Feasible) {
            result.status = SolveResult::Status::Exact;
            result.chi = t;
            result.witness = std::move(step.witness);
            return result;
        }
        if (step.status == SolveResult::Status::Inconclusive) {
            result.status = t > lb.lower ? SolveResult::Status::LowerBound
                                         : SolveResult::Status::Inconclusive;
            result.chi = t;
            result.note = "search exhausted its budget at t=" + std::to_string(t) +
                          "; chi_lt >= " + std::to_string(t) + " proved";
            return result;
        }
    }
    result.status = SolveResult::Status::Inconclusive;
    result.note = "no labeling found up to t = p+q";
    return result;
}

namespace {

// Shared shape of the two one-sided exhaustive searches.
template <typename CheckFn>
SolveResult exhaustive_min_colors(int count, const SearchBudget& budget, CheckFn&& check) {
    std::vector<int> perm(count);
    std::iota(perm.begin(), perm.end(), 1);
    SolveResult result;
    int best = count + 1;
    std::vector<int> best_perm;
    long long nodes = 0;
    do {
        ++nodes;
        if (budget.node_limit > 0 && nodes > budget.node_limit) {
            result.status = SolveResult::Status::Inconclusive;
            result.note = "budget exhausted";
            result.stats.nodes = nodes;
            return result;
        }
        int colors = check(perm);
        if (colors > 0 && colors < best) {
            best = colors;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    result.stats.nodes = nodes;
    if (best_perm.empty()) {
        result.status = SolveResult::Status::Infeasible;
        return result;
    }
    result.status = SolveResult::Status::Exact;
    result.chi = best;
    result.witness = TotalLabeling{};
    // positional witness; the caller re-maps indices onto its own ids
    for (size_t i = 0; i < best_perm.size(); ++i) result.witness->vertex_label[static_cast<Id>(i)] = best_perm[i];
    return result;
}

}  // namespace

SolveResult solve_chi_la(const Graph& g, const SearchBudget& budget) {
    if (!is_admissible(g))
        throw error(errc::inadmissible_graph, "solve_chi_la: graph is not admissible");
    std::vector<Id> eids;
    for (const Edge& e : g.edges()) eids.push_back(e.id);
    std::sort(eids.begin(), eids.end());
    auto check = [&](const std::vector<int>& perm) -> int {
        EdgeOnlyLabeling f;
        for (size_t i = 0; i < eids.size(); ++i) f.edge_label[eids[i]] = perm[i];
        LocalCheck c = verify_local_antimagic(g, f);
        return c.ok ? c.color_count : 0;
    };
    SolveResult r = exhaustive_min_colors(g.size(), budget, check);
    if (r.status == SolveResult::Status::Exact) {
        // re-map the positional witness onto edge ids
        TotalLabeling w;
        for (const auto& [pos, label] : r.witness->vertex_label)
            w.edge_label[eids[static_cast<size_t>(pos)]] = label;
        r.witness = std::move(w);
    }
    return r;
}

SolveResult solve_chi_lea(const Graph& g, const SearchBudget& budget) {
    if (!is_admissible(g))
        throw error(errc::inadmissible_graph, "solve_chi_lea: graph is not admissible");
    std::vector<Id> vids = g.vertices();
    std::sort(vids.begin(), vids.end());
    auto check = [&](const std::vector<int>& perm) -> int {
        VertexOnlyLabeling h;
        for (size_t i = 0; i < vids.size(); ++i) h.vertex_label[vids[i]] = perm[i];
        LocalCheck c = verify_local_edge_antimagic(g, h);
        return c.ok ? c.color_count : 0;
    };
    SolveResult r = exhaustive_min_colors(g.order(), budget, check);
    if (r.status == SolveResult::Status::Exact) {
        TotalLabeling w;
        for (const auto& [pos, label] : r.witness->vertex_label)
            w.vertex_label[vids[static_cast<size_t>(pos)]] = label;
        r.witness = std::move(w);
    }
    return r;
}

}  // namespace ltat
