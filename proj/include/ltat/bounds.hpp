// bounds.hpp — lower/upper bounds on chi_lt and the settled-value database.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"

namespace ltat {

struct BoundJustification {
    std::string rule;
    Weight bound;
};

struct BoundReport {
    Weight lower = 0;
    std::optional<Weight> upper;
    std::vector<BoundJustification> justifications;
    std::optional<Weight> exact;  // set when lower == upper
};

// Max over: Delta+1, pendant_count+1, the settled >= 4 component rules, and
// the unique-max-degree rule when its hypotheses verify.
BoundReport lower_bound(const Graph& g);

// k+2 when G has a unique max-degree vertex (Delta >= 3, not adjacent to a
// pendant vertex), all other degrees <= m < Delta, k >= Delta pendant edges
// and Delta(Delta+1) > max{m[2(p+q)-m+1], 4(p+q)-2}; absent otherwise.
std::optional<Weight> thm_D_lower(const Graph& g);

// chi_lt(G) = 3 iff G = mC6 (m >= 1) or mC6 + P6 (m >= 0).
bool classify_chi3(const Graph& g);

struct KnownValue {
    Weight lower = 0;
    Weight upper = 0;
    std::string rule;
    bool exact() const { return lower == upper; }
};

// Settled families only; absent when the component pattern is not covered.
std::optional<KnownValue> known_values(const Graph& g);

}  // namespace ltat
