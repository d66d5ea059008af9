// constructions.hpp — closed-form local total antimagic labelings for the
// cycle/path families, pendant extensions, and tightness predictions for
// extended graphs. Every generator re-verifies its output.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"

namespace ltat {

struct ConstructionResult {
    Graph graph;
    TotalLabeling labeling;
    int predicted_colors = 0;
    std::optional<std::vector<Weight>> predicted_weights;  // sorted, when stated
    std::string provenance;
    VerificationReport report;  // from verify_ltal, never assumed
    bool warning = false;
    std::string note;

    bool verified() const { return report.valid; }
    int actual_colors() const { return report.color_count; }
};

// mC6: 3 colors {12m, 12m+1, 12m+2}.
ConstructionResult label_mC6(int m);

// mC6 + P6 (m >= 0): 3 colors {12m+10, 12m+11, 12m+12}.
ConstructionResult label_mC6_P6(int m);

enum class SmallCycle { C3, C5, C8 };

// C3 -> 4 colors, C5 -> 4 colors, C8 -> 5 colors.
ConstructionResult label_small_cycle(SmallCycle which);

// mC4: 4 colors {6m+1, 7m+1, 9m+1, 10m+1}.
ConstructionResult label_mC4(int m);

// mC6 + nP3: 4 colors at n=1, 2n+1 colors for n >= 2.
ConstructionResult label_mC6_nP3(int m, int n);

// mC6 + nP6: 2n+1 colors [9n+12m+1, 11n+12m+1].
ConstructionResult label_mC6_nP6(int m, int n);

// mC6 + nP6 + aP3: 2n+2a+1 colors when n >= 2a+2 or a >= 2n, otherwise up
// to the case upper bound. a=1 is accepted with a warning flag.
ConstructionResult label_mC6_nP6_aP3(int m, int n, int a);

struct ExtensionSpec {
    Id target = -1;  // vertex v of the base graph
    int k = 0;       // block width; must equal the base label of v
    int s = 0;       // block count
};

// Attaches ks pendant edges to v and labels them by the block formulas,
// with the odd-k swap and, for k=1, a block-rotation repair when the swap
// alone does not validate.
ConstructionResult extend_pendants(const ConstructionResult& base, const ExtensionSpec& spec);

enum class ExtensionFamily { mC6_nP3, mC6_nP6_aP3 };

struct ExtensionPrediction {
    Weight lower = 0;
    Weight upper = 0;
    bool tight = false;  // lower == upper proven by the membership condition
};

// Evaluates the arithmetic membership conditions for chi_lt(G_v(k,s)) on the
// two extension families; role names a tagged vertex (e.g. "u_{1,1}").
ExtensionPrediction predict_extension_conditions(ExtensionFamily family,
                                                 const std::string& role, int k, int s,
                                                 int m, int n, int a = 0);

}  // namespace ltat
