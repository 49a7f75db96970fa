#ifndef DPCOLOR_BOUNDS_HPP
#define DPCOLOR_BOUNDS_HPP

#include <optional>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// Closed-form upper bounds on Z_DP(G), the least s making the DP-chromatic
/// number of J(G, s) collapse to the chromatic number.
struct BoundsReport {
    int n = 0, m = 0;
    int k = 0;       // exact chromatic number
    int delta = 0;   // minimum degree (0 for the empty graph)
    long long upper_basic = 0;        // 3m
    bool refined_applicable = false;  // delta >= k - 1
    // The refined bound 3m - (3/2)(k-1)n can be a half-integer; Z_DP is
    // integral, so the floor is the usable bound. refined_twice keeps the
    // exact doubled value 6m - 3(k-1)n.
    long long refined_twice = 0;
    long long upper_refined = 0;      // floor(refined_twice / 2)
};

BoundsReport zdp_upper(const Graph& g, long long node_cap = default_node_cap);

/// Per-vertex deficiencies sigma(v) = max{deg_G(v) + |A| - |L(v)| + 1, 0} and
/// the sufficiency verdict: when 2|A| >= 3*sigma and every dominating vertex
/// has |L(a)| >= |A| + k, any such cover of J(G, A) is colorable, no search
/// needed.
struct SigmaReport {
    std::vector<long long> per_vertex;
    long long total = 0;
    long long a_size = 0;
    int k = 0;
    bool condition_holds = false;  // 2|A| >= 3*total
    bool list_guard = false;       // a_size == 0 or a_list_min >= a_size + k

    bool certified() const { return condition_holds && list_guard; }
};

/// list_sizes must have one entry per vertex of g; k is the chromatic number
/// of g (computed exactly by the caller or via chromatic_number).
SigmaReport sigma_report(const Graph& g, long long a_size,
                         const std::vector<long long>& list_sizes,
                         long long a_list_min, int k);

/// n-vertex extremal bounds: upper = floor(3n^2/2) always; lower = n^2/4 - n
/// for even n >= 6, absent otherwise.
struct ZdpNBounds {
    std::optional<long long> lower;
    long long upper = 0;
};

ZdpNBounds zdp_n_bounds(long long n);

/// True iff 2r - n >= 6(n-r)^2, which certifies that every n-vertex graph
/// with chromatic number r has DP-chromatic number equal to it.
bool chi_equals_chidp_guaranteed(long long n, long long r);

/// Exact Z_DP by direct search: smallest s <= s_max with
/// chi_dp(J(g, s)) == chi(J(g, s)), or nullopt if none.
///
/// Stopping at the first success is sound because equality persists: given a
/// cover of J(g, s+1) with lists of size chi(g)+s+1, fix any value x for one
/// dominating vertex and drop the H-neighbors of x from the other lists; what
/// remains is a cover of J(g, s) with lists of size at least chi(g)+s, which
/// equality at s makes colorable, and the transversal extends by x.
std::optional<int> zdp_exact(const Graph& g, int s_max, const SolveOptions& opts = {});

} // namespace dpcolor

#endif
