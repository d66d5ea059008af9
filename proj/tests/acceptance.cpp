// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ltat/bounds.hpp"
#include "ltat/constructions.hpp"
#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"
#include "ltat/solver.hpp"

using namespace ltat;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

std::vector<Weight> weights_of(const ConstructionResult& r) {
    return weight_profile(r.graph, r.labeling).distinct_weights;
}

bool construction_ok(const ConstructionResult& r, int colors,
                     const std::vector<Weight>* weights = nullptr) {
    if (!r.verified()) return false;
    if (r.actual_colors() != colors || r.predicted_colors != colors) return false;
    if (weights && weights_of(r) != *weights) return false;
    return true;
}

// ---- criterion 1: base construction sweeps, < 10 s ----
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int m = 1; m <= 50 && ok; ++m) {
        std::vector<Weight> w6 = {12LL * m, 12LL * m + 1, 12LL * m + 2};
        ok = ok && construction_ok(label_mC6(m), 3, &w6);
        std::vector<Weight> w4 = {6LL * m + 1, 7LL * m + 1, 9LL * m + 1, 10LL * m + 1};
        ok = ok && construction_ok(label_mC4(m), 4, &w4);
    }
    for (int m = 0; m <= 50 && ok; ++m) ok = ok && construction_ok(label_mC6_P6(m), 3);
    ok = ok && construction_ok(label_small_cycle(SmallCycle::C3), 4);
    ok = ok && construction_ok(label_small_cycle(SmallCycle::C5), 4);
    ok = ok && construction_ok(label_small_cycle(SmallCycle::C8), 5);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 10.0;
    report(1, ok, "construction sweeps m in [1,50] (" + std::to_string(secs) + " s)");
}

// ---- criterion 2: multi-family sweeps, exact equality ----
int mixed_case_upper(int n, int a) {
    int base = 2 * n + 2 * a + 1;
    if (n >= 2 * a + 2 || a >= 2 * n) return base;
    if (n == 2 * a + 1 || (a >= n + 1 && a <= 2 * n - 1)) return base + 1;
    if (n == 2 * a || a == n) return base + 2;
    if ((n >= a + 1 && n <= 2 * a - 1) || a == n - 1) return base + 3;
    return base + 4;  // n <= a or a <= n-2
}

void criterion2() {
    bool ok = true;
    for (int m = 1; m <= 20 && ok; ++m)
        for (int n = 1; n <= 20 && ok; ++n) {
            ok = ok && construction_ok(label_mC6_nP3(m, n), n == 1 ? 4 : 2 * n + 1);
            ok = ok && construction_ok(label_mC6_nP6(m, n), 2 * n + 1);
        }
    for (int m = 1; m <= 10 && ok; ++m)
        for (int n = 1; n <= 12 && ok; ++n)
            for (int a = 2; a <= 12 && ok; ++a) {
                ConstructionResult r = label_mC6_nP6_aP3(m, n, a);
                if (!r.verified()) { ok = false; break; }
                int colors = r.actual_colors();
                if (n >= 2 * a + 2 || a >= 2 * n)
                    ok = colors == 2 * n + 2 * a + 1;
                else
                    ok = colors >= 2 * n + 2 * a + 1 && colors <= mixed_case_upper(n, a);
            }
    report(2, ok, "family sweeps with exact color counts");
}

// ---- criterion 3: figure regressions ----
void criterion3() {
    bool ok = true;
    std::vector<Weight> f1 = {24, 25, 26};
    ok = ok && construction_ok(label_mC6(2), 3, &f1);
    std::vector<Weight> f2 = {34, 35, 36};
    ok = ok && construction_ok(label_mC6_P6(2), 3, &f2);
    std::vector<Weight> f3 = {31, 32, 33, 34, 65};
    ok = ok && construction_ok(label_mC6_nP3(2, 2), 5, &f3);
    std::vector<Weight> f4 = {43, 44, 45, 46, 47};
    ok = ok && construction_ok(label_mC6_nP6(2, 2), 5, &f4);

    ConstructionResult f5 = label_mC6_nP6_aP3(1, 4, 1);
    std::vector<Weight> w5 = weights_of(f5);
    ok = ok && f5.verified() && f5.actual_colors() == 11 &&
         std::count(w5.begin(), w5.end(), 121) == 1;
    ConstructionResult f5b = label_mC6_nP6_aP3(1, 1, 3);
    std::vector<Weight> w5b = weights_of(f5b);
    ok = ok && f5b.verified() && f5b.actual_colors() == 9 &&
         std::count(w5b.begin(), w5b.end(), 71) == 1;

    {
        ConstructionResult base = label_mC6_nP3(2, 2);
        Id v = *base.graph.find_tag("v_{1,2}");
        ConstructionResult ext = extend_pendants(base, ExtensionSpec{v, 30, 2});
        ok = ok && ext.verified() && ext.actual_colors() == 65 &&
             weight_profile(ext.graph, ext.labeling).of(v) == 6635;
    }
    {
        ConstructionResult base = label_mC6_nP6_aP3(1, 1, 3);
        Id v = *base.graph.find_tag("v_{3,2}");
        ConstructionResult ext = extend_pendants(base, ExtensionSpec{v, 30, 1});
        ok = ok && ext.verified() && ext.actual_colors() == 39 &&
             weight_profile(ext.graph, ext.labeling).of(v) == 2576;
    }
    report(3, ok, "figure regression vectors");
}

// ---- criterion 4: solver exact values ----
void criterion4() {
    bool ok = true;
    SearchBudget budget;
    auto expect = [&](const Graph& g, int chi) {
        SolveResult r = solve_chi_lt(g, budget);
        if (r.status != SolveResult::Status::Exact || r.chi != chi || !r.witness) return false;
        VerificationReport check = verify_ltal(g, *r.witness);
        return check.valid && check.color_count == chi;
    };
    ok = ok && expect(build_path(3), 3);
    ok = ok && expect(build_path(4), 4);
    ok = ok && expect(build_path(5), 4);
    ok = ok && expect(build_cycle(3), 4);
    ok = ok && expect(build_cycle(4), 4);
    ok = ok && expect(build_cycle(5), 4);
    SolveResult p6 = exists_ltal_with_colors(build_path(6), 3, budget);
    ok = ok && p6.status == SolveResult::Status::Feasible && p6.witness &&
         verify_ltal(build_path(6), *p6.witness).valid;
    report(4, ok, "solver exact values on small paths and cycles");
}

// ---- criterion 5: mechanized impossibility ----
void criterion5() {
    SearchBudget budget;
    budget.node_limit = 1'000'000'000;
    SolveResult p8 = exists_ltal_with_colors(build_path(8), 3, budget);
    Graph c3p3 = disjoint_union({build_cycle(3), build_path(3)});
    SolveResult cp = exists_ltal_with_colors(c3p3, 3, budget);
    // budget exhaustion is a failure here, not a pass
    bool ok = p8.status == SolveResult::Status::Infeasible &&
              cp.status == SolveResult::Status::Infeasible;
    report(5, ok, "P8 and C3+P3 proved infeasible at 3 colors");
}

// ---- criterion 6: stretch solver targets (Inconclusive allowed) ----
void criterion6() {
    SearchBudget budget;
    budget.node_limit = 200'000'000;
    bool ok = true;
    std::string detail;
    SolveResult c6 = solve_chi_lt(build_cycle(6), budget);
    if (c6.status == SolveResult::Status::Exact)
        ok = ok && c6.chi == 3;
    else
        detail += " (C6 inconclusive)";
    SolveResult p6 = solve_chi_lt(build_path(6), budget);
    if (p6.status == SolveResult::Status::Exact)
        ok = ok && p6.chi == 3;
    else
        detail += " (P6 inconclusive)";
    // t = 2 is ruled out structurally: the lower bound engine proves >= 3
    ok = ok && lower_bound(build_path(6)).lower >= 3;
    report(6, ok, "stretch: chi_lt(C6) and chi_lt(P6) by search" + detail);
}

// ---- criterion 7: randomized property suite ----
void criterion7() {
    std::mt19937 rng(424242);
    std::vector<Graph> graphs;
    graphs.push_back(build_path(3));
    graphs.push_back(build_path(4));
    graphs.push_back(build_path(7));
    graphs.push_back(build_cycle(3));
    graphs.push_back(build_cycle(5));
    graphs.push_back(build_cycle(6));
    graphs.push_back(disjoint_union({build_cycle(3), build_path(3)}));
    graphs.push_back(disjoint_union({build_path(3), build_path(4)}));
    graphs.push_back(build_fan(2));
    Graph with_k2 = disjoint_union({build_cycle(4), build_path(2)});

    bool ok = true;
    const int trials_per_graph = 10000 / static_cast<int>(graphs.size()) + 1;
    for (const Graph& g : graphs) {
        int total = g.order() + g.size();
        if (total > 14) { ok = false; break; }
        std::vector<int> perm(total);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<Id> vs = g.vertices();
        std::sort(vs.begin(), vs.end());
        std::vector<Id> es;
        for (const Edge& e : g.edges()) es.push_back(e.id);
        std::sort(es.begin(), es.end());
        for (int trial = 0; trial < trials_per_graph && ok; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            TotalLabeling f;
            size_t i = 0;
            for (Id v : vs) f.vertex_label[v] = perm[i++];
            for (Id e : es) f.edge_label[e] = perm[i++];
            WeightProfile w = weight_profile(g, f);
            Weight vsum = 0, esum = 0, elabels2 = 0, degsum = 0;
            for (Id v : vs) {
                vsum += w.of(v);
                degsum += Weight(g.degree(v)) * f.of_vertex(v);
            }
            for (Id e : es) {
                esum += w.of(e);
                elabels2 += 2 * f.of_edge(e);
            }
            ok = ok && vsum == elabels2 && esum == degsum;
        }
        if (!ok) break;
    }

    // any labeling of a graph with a K2 component fails verification
    {
        int total = with_k2.order() + with_k2.size();
        std::vector<int> perm(total);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<Id> vs = with_k2.vertices();
        std::sort(vs.begin(), vs.end());
        std::vector<Id> es;
        for (const Edge& e : with_k2.edges()) es.push_back(e.id);
        std::sort(es.begin(), es.end());
        for (int trial = 0; trial < 500 && ok; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            TotalLabeling f;
            size_t i = 0;
            for (Id v : vs) f.vertex_label[v] = perm[i++];
            for (Id e : es) f.edge_label[e] = perm[i++];
            ok = ok && !verify_ltal(with_k2, f).valid;
        }
    }

    // generators achieving pendants+1 colors put label p+q on a pendant
    // vertex or pendant edge
    auto top_label_on_pendant = [](const ConstructionResult& r) {
        int top = r.graph.order() + r.graph.size();
        for (const auto& [v, label] : r.labeling.vertex_label)
            if (label == top) return r.graph.degree(v) == 1;
        for (const auto& [e, label] : r.labeling.edge_label)
            if (label == top) {
                const Edge& ed = r.graph.edge(e);
                return r.graph.degree(ed.u) == 1 || r.graph.degree(ed.v) == 1;
            }
        return false;
    };
    for (int n = 2; n <= 6 && ok; ++n) {
        ok = ok && top_label_on_pendant(label_mC6_nP3(1, n));
        ok = ok && top_label_on_pendant(label_mC6_nP6(1, n));
        ok = ok && top_label_on_pendant(label_mC6_nP6_aP3(1, 2 * n + 2, n));
    }
    report(7, ok, "randomized weight identities, K2 rejection, top-label placement");
}

// ---- criterion 8: composition from brute-forced halves ----
void criterion8() {
    bool ok = true;
    SearchBudget budget;
    for (int n : {3, 4, 5, 6}) {
        Graph c = build_cycle(n);
        SolveResult la = solve_chi_la(c, budget);
        SolveResult lea = solve_chi_lea(c, budget);
        if (la.status != SolveResult::Status::Exact ||
            lea.status != SolveResult::Status::Exact) {
            ok = false;
            break;
        }
        EdgeOnlyLabeling f;
        f.edge_label = la.witness->edge_label;
        VertexOnlyLabeling h;
        h.vertex_label = lea.witness->vertex_label;
        TotalLabeling composed = compose_total(c, f, h);
        VerificationReport r = verify_ltal(c, composed);
        ok = ok && r.valid && r.color_count <= la.chi + lea.chi;
    }
    report(8, ok, "composed labelings verify within chi_la + chi_lea colors");
}

// ---- criterion 9: bounds engine consistency ----
void criterion9() {
    bool ok = true;
    SearchBudget budget;
    auto solver_exact = [&](const Graph& g) {
        SolveResult r = solve_chi_lt(g, budget);
        return r.status == SolveResult::Status::Exact ? r.chi : -1;
    };
    std::vector<Graph> small;
    small.push_back(build_path(3));
    small.push_back(build_path(4));
    small.push_back(build_path(5));
    small.push_back(build_cycle(3));
    small.push_back(build_cycle(4));
    small.push_back(build_cycle(5));
    for (const Graph& g : small) {
        int chi = solver_exact(g);
        ok = ok && chi > 0 && lower_bound(g).lower <= chi;
    }

    for (int n = 2; n <= 30 && ok; ++n)
        for (int k = 1; k <= 5; ++k) {
            if (k > 2 * n - 3) continue;  // graph family undefined here
            Graph g = build_fan_pendant(n, k);
            long long p = g.order(), q = g.size();
            long long delta = 2LL * n, mm = k + 2;
            bool expect = 2 * n >= k + 3 &&
                          delta * (delta + 1) >
                              std::max(mm * (2 * (p + q) - mm + 1), 4 * (p + q) - 2);
            std::optional<Weight> got = thm_D_lower(g);
            ok = ok && got.has_value() == expect;
            if (got) ok = ok && *got == 2LL * n * k + 2;
        }
    report(9, ok, "lower bounds below solver exacts; pendant-fan rule matches the inequality");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
