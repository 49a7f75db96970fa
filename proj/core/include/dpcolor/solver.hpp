#ifndef DPCOLOR_SOLVER_HPP
#define DPCOLOR_SOLVER_HPP

#include <optional>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

struct SolveStats {
    long long nodes = 0;
    int max_depth = 0;
};

struct SolveResult {
    bool satisfiable = false;
    std::optional<Transversal> witness;  // present iff satisfiable
    SolveStats stats;
};

struct SolveOptions {
    long long node_cap = default_node_cap;
    long long cover_cap = 10'000'000;  // max covers a quantifier may enumerate
    int jobs = 1;                      // parallel cover scanning; results stay deterministic
};

/// Complete backtracking search for a transversal. Base vertices are assigned
/// most-constrained-first (ties by lowest index); values in ascending id
/// order; each assignment prunes the chosen vertex's H-neighbors from the
/// remaining lists. Unsatisfiable means no transversal exists.
/// Throws resource_limit_error when node_cap is exceeded.
SolveResult find_transversal(const Cover& c, long long node_cap = default_node_cap);

/// True iff membership and pairwise H-independence both hold.
bool check_transversal(const Cover& c, const Transversal& t);

/// Colors along the degeneracy order, keeping the lowest-id list element not
/// adjacent to an earlier choice; never backtracks. Requires every list to
/// have at least order.d + 1 elements, which guarantees success.
SolveResult greedy_transversal(const Cover& c, const DegeneracyOrder& order);

struct DpDecision {
    bool colorable = false;
    long long covers = 0;             // family size at this k
    long long refuting_index = -1;    // lowest refuting index, -1 if colorable
    std::optional<Cover> refuting_cover;
};

/// True iff every cover in the normalized family enumerate_covers(g, k) has a
/// transversal. On false, returns the lowest-index refuting cover regardless
/// of opts.jobs.
DpDecision is_dp_colorable_at(const Graph& g, int k, const SolveOptions& opts = {});

/// Exact DP-chromatic number. Ascends from the exact chromatic number and
/// stops no later than degeneracy + 1, where the greedy argument guarantees
/// colorability without enumeration.
int chi_dp(const Graph& g, const SolveOptions& opts = {});

} // namespace dpcolor

#endif
