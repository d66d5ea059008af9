// solver.hpp — exact chi_lt computation by backtracking over bijections.
#pragma once

#include <optional>
#include <string>

#include "ltat/graph.hpp"
#include "ltat/labeling.hpp"

namespace ltat {

struct SearchBudget {
    long long node_limit = 1'000'000'000;
    double time_limit_secs = 0;  // 0 = unlimited
    std::optional<int> target_colors;
};

struct SearchStats {
    long long nodes = 0;
    long long prunes = 0;
};

struct SolveResult {
    enum class Status {
        Feasible,      // existence query: labeling found
        Infeasible,    // existence query: exhaustively ruled out
        Exact,         // chi known; witness attached, chi-1 proved infeasible
        LowerBound,    // all t < chi_lower ruled out before the budget ran out
        Inconclusive,  // budget exhausted
    };
    Status status = Status::Inconclusive;
    int chi = 0;  // Exact: chi_lt; LowerBound: proved lower bound
    std::optional<TotalLabeling> witness;
    SearchStats stats;
    std::string note;
};

// Does G admit a local total antimagic labeling with at most t distinct
// weights? Deterministic: the witness is the first labeling in ascending
// label order subject to the symmetry-breaking constraints.
SolveResult exists_ltal_with_colors(const Graph& g, int t, const SearchBudget& budget);

// Iterates t = lower_bound(G), ... until feasible.
SolveResult solve_chi_lt(const Graph& g, const SearchBudget& budget);

// Exact chi_la / chi_lea by exhaustive search over edge-only / vertex-only
// bijections; tiny instances only. The witness SolveResult carries only the
// corresponding half of the labeling (values in [1,q] resp. [1,p]).
SolveResult solve_chi_la(const Graph& g, const SearchBudget& budget);
SolveResult solve_chi_lea(const Graph& g, const SearchBudget& budget);

}  // namespace ltat
