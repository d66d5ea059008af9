#include "ltat/bounds.hpp"

#include <algorithm>

namespace ltat {

namespace {

struct Pattern {
    int c3 = 0, c4 = 0, c5 = 0, c6 = 0, c8 = 0;
    int p3 = 0, p4 = 0, p6 = 0;
    int other = 0;
    std::vector<int> single_paths;  // orders of path components not 3/4/6
};

Pattern pattern_of(const ComponentSummary& summary) {
    Pattern pat;
    for (const auto& [cls, mult] : summary.classes) {
        if (cls.kind == ComponentKind::Cycle) {
            switch (cls.order) {
                case 3: pat.c3 += mult; break;
                case 4: pat.c4 += mult; break;
                case 5: pat.c5 += mult; break;
                case 6: pat.c6 += mult; break;
                case 8: pat.c8 += mult; break;
                default: pat.other += mult;
            }
        } else if (cls.kind == ComponentKind::Path) {
            switch (cls.order) {
                case 3: pat.p3 += mult; break;
                case 4: pat.p4 += mult; break;
                case 6: pat.p6 += mult; break;
                default:
                    for (int i = 0; i < mult; ++i) pat.single_paths.push_back(cls.order);
            }
        } else {
            pat.other += mult;
        }
    }
    return pat;
}

}  // namespace

std::optional<Weight> thm_D_lower(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    Id max_v = -1;
    int delta = -1;
    bool unique_max = true;
    int second = 0;
    for (Id v : g.vertices()) {
        int d = g.degree(v);
        if (d > delta) {
            if (delta >= 0) second = std::max(second, delta);
            delta = d;
            max_v = v;
            unique_max = true;
        } else if (d == delta) {
            unique_max = false;
            second = std::max(second, d);
        } else {
            second = std::max(second, d);
        }
    }
    if (delta < 3 || !unique_max) return std::nullopt;
    for (Id w : g.neighbors(max_v))
        if (g.degree(w) == 1) return std::nullopt;
    DegreeStats st = degree_stats(g);
    const int k = st.pendant_edge_count;
    if (k < delta) return std::nullopt;
    const long long mm = second;  // all non-max degrees <= mm < delta
    const long long pq = g.order() + g.size();
    const long long lhs = static_cast<long long>(delta) * (delta + 1);
    const long long rhs = std::max(mm * (2 * pq - mm + 1), 4 * pq - 2);
    if (!(lhs > rhs)) return std::nullopt;
    return static_cast<Weight>(k) + 2;
}

BoundReport lower_bound(const Graph& g) {
    if (!is_admissible(g))
        throw error(errc::inadmissible_graph, "lower_bound: graph is not admissible");
    BoundReport report;
    auto add = [&](const std::string& rule, Weight bound) {
        report.justifications.push_back({rule, bound});
        report.lower = std::max(report.lower, bound);
    };
    add("admissible (chi_t >= Delta+1 >= 3)", 3);
    DegreeStats st = degree_stats(g);
    add("Delta+1", static_cast<Weight>(st.max_degree) + 1);
    if (st.pendant_edge_count >= 1)
        add("pendant edges + 1", static_cast<Weight>(st.pendant_edge_count) + 1);
    ComponentSummary summary = classify_components(g);
    for (const auto& [cls, mult] : summary.classes) {
        if (cls.kind == ComponentKind::Cycle && cls.order != 6)
            add("2-regular component of order != 6", 4);
        if (cls.kind == ComponentKind::Path &&
            (cls.order == 4 || (cls.order >= 5 && cls.order % 2 == 1) ||
             (cls.order >= 8 && cls.order % 2 == 0)))
            add("path component P_" + std::to_string(cls.order), 4);
    }
    if (auto d = thm_D_lower(g)) add("unique max-degree vertex rule", *d);
    if (auto kv = known_values(g)) {
        report.upper = kv->upper;
        report.lower = std::max(report.lower, kv->lower);
        if (kv->lower > 0)
            report.justifications.push_back({"known value (" + kv->rule + ")", kv->lower});
    }
    if (report.upper && *report.upper == report.lower) report.exact = report.lower;
    return report;
}

bool classify_chi3(const Graph& g) {
    if (!is_admissible(g)) return false;
    ComponentSummary summary = classify_components(g);
    Pattern pat = pattern_of(summary);
    bool only = pat.c3 == 0 && pat.c4 == 0 && pat.c5 == 0 && pat.c8 == 0 && pat.other == 0 &&
                pat.p3 == 0 && pat.p4 == 0 && pat.single_paths.empty();
    if (!only) return false;
    if (pat.p6 == 0) return pat.c6 >= 1;
    return pat.p6 == 1;  // mC6 + P6, m >= 0
}

std::optional<KnownValue> known_values(const Graph& g) {
    ComponentSummary summary = classify_components(g);
    Pattern pat = pattern_of(summary);
    if (pat.other > 0) return std::nullopt;
    auto cycles = pat.c3 + pat.c4 + pat.c5 + pat.c6 + pat.c8;
    auto paths = pat.p3 + pat.p4 + pat.p6 + static_cast<int>(pat.single_paths.size());

    // mC6 and mC6 + P6
    if (pat.c6 >= 0 && cycles == pat.c6 && pat.p3 == 0 && pat.p4 == 0 &&
        pat.single_paths.empty()) {
        if (pat.p6 == 0 && pat.c6 >= 1) return KnownValue{3, 3, "thm-mC6"};
        if (pat.p6 == 1) return KnownValue{3, 3, "thm-chilt=3"};
        if (pat.p6 >= 2 && pat.c6 >= 1) {
            Weight v = 2LL * pat.p6 + 1;
            return KnownValue{v, v, "thm-mC6+nP6"};
        }
    }
    // single paths
    if (cycles == 0 && paths == 1) {
        if (pat.p3 == 1) return KnownValue{3, 3, "chi_lt(P_3)=3"};
        if (pat.p4 == 1) return KnownValue{4, 4, "chi_lt(P_4)=4"};
        if (!pat.single_paths.empty()) {
            int n = pat.single_paths.front();
            if (n >= 5 && n % 2 == 1) return KnownValue{4, 4, "chi_lt(P_odd)=4"};
            if (n >= 8 && n % 2 == 0) return KnownValue{4, 5, "lem-Pn"};
        }
    }
    // settled 2-regular families
    if (paths == 0) {
        if (cycles == pat.c4 && pat.c4 >= 1) return KnownValue{4, 4, "thm-2reg (mC4)"};
        if (cycles == 1 && pat.c3 == 1) return KnownValue{4, 4, "thm-2reg (C3)"};
        if (cycles == 1 && pat.c5 == 1) return KnownValue{4, 4, "thm-2reg (C5)"};
        if (cycles == 1 && pat.c8 == 1) return KnownValue{4, 5, "thm-2reg (C8)"};
    }
    // mC6 + nP3
    if (cycles == pat.c6 && pat.c6 >= 1 && paths == pat.p3 && pat.p3 >= 1) {
        if (pat.p3 == 1) return KnownValue{4, 4, "thm-mC6nP3"};
        Weight v = 2LL * pat.p3 + 1;
        return KnownValue{v, v, "thm-mC6nP3"};
    }
    // mC6 + nP6 + aP3
    if (cycles == pat.c6 && pat.c6 >= 1 && pat.p6 >= 1 && pat.p3 >= 2 && pat.p4 == 0 &&
        pat.single_paths.empty()) {
        const long long n = pat.p6, a = pat.p3;
        Weight lo = 2 * n + 2 * a + 1;
        if (n >= 2 * a + 2 || a >= 2 * n)
            return KnownValue{lo, lo, "thm-mC6+nP6+aP3"};
        Weight up;
        if (n == 2 * a + 1 || (a >= n + 1 && a <= 2 * n - 1))
            up = lo + 1;
        else if (n == 2 * a || a == n)
            up = lo + 2;
        else if ((n >= a + 1 && n <= 2 * a - 1) || a == n - 1)
            up = lo + 3;
        else
            up = lo + 4;
        return KnownValue{lo, up, "thm-mC6+nP6+aP3"};
    }
    return std::nullopt;
}

}  // namespace ltat
