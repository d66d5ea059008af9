#include <doctest.h>

#include "ltat/bounds.hpp"
#include "ltat/constructions.hpp"
#include "ltat/graph.hpp"

using namespace ltat;

TEST_CASE("settled single-component values") {
    CHECK(lower_bound(build_path(3)).exact == 3);
    CHECK(lower_bound(build_path(4)).exact == 4);
    CHECK(lower_bound(build_path(5)).exact == 4);
    CHECK(lower_bound(build_path(7)).exact == 4);
    CHECK(lower_bound(build_path(6)).exact == 3);
    BoundReport p8 = lower_bound(build_path(8));
    CHECK(p8.lower == 4);
    CHECK(p8.upper == 5);
    CHECK_FALSE(p8.exact.has_value());

    CHECK(lower_bound(build_cycle(3)).exact == 4);
    CHECK(lower_bound(build_cycle(4)).exact == 4);
    CHECK(lower_bound(build_cycle(5)).exact == 4);
    CHECK(lower_bound(build_cycle(6)).exact == 3);
    BoundReport c8 = lower_bound(build_cycle(8));
    CHECK(c8.lower == 4);
    CHECK(c8.upper == 5);

    // odd cycle >= 9: only the generic 2-regular floor of 4
    BoundReport c9 = lower_bound(build_cycle(9));
    CHECK(c9.lower == 4);
}

TEST_CASE("settled families") {
    CHECK(lower_bound(disjoint_union({build_cycle(6), build_cycle(6)})).exact == 3);
    CHECK(lower_bound(disjoint_union({build_cycle(6), build_path(6)})).exact == 3);
    CHECK(lower_bound(disjoint_union(
              {build_cycle(4), build_cycle(4), build_cycle(4)})).exact == 4);
    CHECK(lower_bound(disjoint_union({build_cycle(6), build_path(3)})).exact == 4);
    Graph g = disjoint_union(
        {build_cycle(6), build_path(3), build_path(3), build_path(3)});
    CHECK(lower_bound(g).exact == 7);  // 2n+1, n = 3
    Graph h = disjoint_union({build_cycle(6), build_path(6), build_path(6)});
    CHECK(lower_bound(h).exact == 5);  // 2n+1, n = 2
}

TEST_CASE("mixed family bound: exact when n >= 2a+2 or a >= 2n") {
    auto mixed = [](int m, int n, int a) {
        std::vector<Graph> parts;
        for (int i = 0; i < m; ++i) parts.push_back(build_cycle(6));
        for (int i = 0; i < n; ++i) parts.push_back(build_path(6));
        for (int i = 0; i < a; ++i) parts.push_back(build_path(3));
        return disjoint_union(parts);
    };
    CHECK(lower_bound(mixed(1, 6, 2)).exact == 2 * 6 + 2 * 2 + 1);
    CHECK(lower_bound(mixed(2, 1, 4)).exact == 2 * 1 + 2 * 4 + 1);  // a >= 2n
    BoundReport open = lower_bound(mixed(1, 3, 2));  // neither condition
    CHECK(open.lower == 2 * 3 + 2 * 2 + 1);
    CHECK(open.upper.has_value());
    CHECK(*open.upper > open.lower);
}

TEST_CASE("degree and pendant floors") {
    Graph star;  // K_{1,4}
    Id c = star.add_vertex("c");
    for (int i = 0; i < 4; ++i) star.add_edge(c, star.add_vertex());
    BoundReport r = lower_bound(star);
    CHECK(r.lower == 5);  // Delta + 1 and pendants + 1

    CHECK_THROWS_AS(lower_bound(build_path(2)), error);
}

TEST_CASE("unique max-degree rule on pendant fans") {
    // hub degree 2n beats rim degree k+2 when 2n >= k+3; rule contributes
    // 2nk+2 iff the product inequality also holds
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= 5; ++k) {
            if (k > 2 * n - 3) continue;
            Graph g = build_fan_pendant(n, k);
            long long p = g.order(), q = g.size();
            long long delta = 2LL * n, mm = k + 2;
            bool expect = 2 * n >= k + 3 &&
                          delta * (delta + 1) >
                              std::max(mm * (2 * (p + q) - mm + 1), 4 * (p + q) - 2);
            std::optional<Weight> got = thm_D_lower(g);
            CHECK(got.has_value() == expect);
            if (got) CHECK(*got == 2LL * n * k + 2);
        }
}

TEST_CASE("rule does not fire without a unique max-degree vertex") {
    CHECK_FALSE(thm_D_lower(build_cycle(6)).has_value());
    // two centers of equal degree
    Graph g;
    Id a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, b);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(a, g.add_vertex());
        g.add_edge(b, g.add_vertex());
    }
    CHECK_FALSE(thm_D_lower(g).has_value());
}

TEST_CASE("chi3 classification") {
    CHECK(classify_chi3(build_cycle(6)));
    CHECK(classify_chi3(disjoint_union({build_cycle(6), build_cycle(6), build_cycle(6)})));
    CHECK(classify_chi3(build_path(6)));
    CHECK(classify_chi3(disjoint_union({build_cycle(6), build_path(6)})));
    CHECK_FALSE(classify_chi3(build_cycle(5)));
    CHECK_FALSE(classify_chi3(disjoint_union({build_cycle(6), build_path(3)})));
    CHECK_FALSE(classify_chi3(disjoint_union({build_cycle(6), build_path(6), build_path(6)})));
    CHECK_FALSE(classify_chi3(build_path(4)));
}
