#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"
#include "ltat/solver.hpp"

using namespace ltat;

namespace {

// Reference answer by brute force over all (p+q)! label assignments.
// Usable up to p+q = 9 or so; exists only to cross-check the real solver.
int naive_chi_lt(const Graph& g) {
    std::vector<Id> elems = g.vertices();
    for (const Edge& e : g.edges()) elems.push_back(e.id);
    std::sort(elems.begin(), elems.end());
    const int total = static_cast<int>(elems.size());
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 1);
    int best = total + 1;
    do {
        TotalLabeling f;
        for (int i = 0; i < total; ++i) {
            Id id = elems[i];
            if (g.has_vertex(id))
                f.vertex_label[id] = perm[i];
            else
                f.edge_label[id] = perm[i];
        }
        VerificationReport r = verify_ltal(g, f);
        if (r.valid) best = std::min(best, r.color_count);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("solver matches full enumeration on the smallest graphs") {
    SearchBudget budget;
    for (const Graph& g : {build_path(3), build_path(4), build_cycle(3), build_cycle(4)}) {
        int naive = naive_chi_lt(g);
        SolveResult r = solve_chi_lt(g, budget);
        REQUIRE(r.status == SolveResult::Status::Exact);
        CHECK(r.chi == naive);
        REQUIRE(r.witness.has_value());
        VerificationReport check = verify_ltal(g, *r.witness);
        CHECK(check.valid);
        CHECK(check.color_count == r.chi);
    }
}

TEST_CASE("known exact values") {
    SearchBudget budget;
    auto chi = [&](const Graph& g) {
        SolveResult r = solve_chi_lt(g, budget);
        REQUIRE(r.status == SolveResult::Status::Exact);
        return r.chi;
    };
    CHECK(chi(build_path(5)) == 4);
    CHECK(chi(build_cycle(5)) == 4);
    CHECK(chi(build_path(6)) == 3);
    CHECK(chi(build_cycle(6)) == 3);
}

TEST_CASE("existence queries") {
    SearchBudget budget;
    SolveResult yes = exists_ltal_with_colors(build_path(6), 3, budget);
    REQUIRE(yes.status == SolveResult::Status::Feasible);
    REQUIRE(yes.witness.has_value());
    VerificationReport r = verify_ltal(build_path(6), *yes.witness);
    CHECK(r.valid);
    CHECK(r.color_count <= 3);

    SolveResult no = exists_ltal_with_colors(build_path(8), 3, budget);
    CHECK(no.status == SolveResult::Status::Infeasible);

    Graph c3p3 = disjoint_union({build_cycle(3), build_path(3)});
    SolveResult no2 = exists_ltal_with_colors(c3p3, 3, budget);
    CHECK(no2.status == SolveResult::Status::Infeasible);

    CHECK_THROWS_AS(exists_ltal_with_colors(build_path(2), 3, budget), error);
}

TEST_CASE("budget exhaustion reports Inconclusive, never a wrong answer") {
    SearchBudget tiny;
    tiny.node_limit = 50;
    SolveResult r = exists_ltal_with_colors(build_path(8), 4, tiny);
    CHECK(r.status == SolveResult::Status::Inconclusive);
    CHECK(r.stats.nodes <= 51);

    SolveResult s = solve_chi_lt(build_path(8), tiny);
    CHECK((s.status == SolveResult::Status::Inconclusive ||
           s.status == SolveResult::Status::LowerBound));
}

TEST_CASE("solver is deterministic") {
    SearchBudget budget;
    SolveResult a = solve_chi_lt(build_cycle(5), budget);
    SolveResult b = solve_chi_lt(build_cycle(5), budget);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == *b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("edge-only and vertex-only exact values on small cycles") {
    SearchBudget budget;
    Graph c3 = build_cycle(3);
    SolveResult la = solve_chi_la(c3, budget);
    REQUIRE(la.status == SolveResult::Status::Exact);
    CHECK(la.chi == 3);  // all three vertex sums are forced distinct on C3
    EdgeOnlyLabeling f;
    f.edge_label = la.witness->edge_label;
    LocalCheck check = verify_local_antimagic(c3, f);
    CHECK(check.ok);
    CHECK(check.color_count == la.chi);

    SolveResult lea = solve_chi_lea(c3, budget);
    REQUIRE(lea.status == SolveResult::Status::Exact);
    CHECK(lea.chi == 3);
    VertexOnlyLabeling h;
    h.vertex_label = lea.witness->vertex_label;
    LocalCheck check2 = verify_local_edge_antimagic(c3, h);
    CHECK(check2.ok);
    CHECK(check2.color_count == lea.chi);
}

TEST_CASE("composition of solved halves verifies with at most the sum of colors") {
    SearchBudget budget;
    for (int n : {3, 4, 5, 6}) {
        Graph c = build_cycle(n);
        SolveResult la = solve_chi_la(c, budget);
        SolveResult lea = solve_chi_lea(c, budget);
        REQUIRE(la.status == SolveResult::Status::Exact);
        REQUIRE(lea.status == SolveResult::Status::Exact);
        EdgeOnlyLabeling f;
        f.edge_label = la.witness->edge_label;
        VertexOnlyLabeling h;
        h.vertex_label = lea.witness->vertex_label;
        TotalLabeling composed = compose_total(c, f, h);
        VerificationReport r = verify_ltal(c, composed);
        CHECK(r.valid);
        CHECK(r.color_count <= la.chi + lea.chi);
    }
}
