#ifndef DPCOLOR_COVER_HPP
#define DPCOLOR_COVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

/// A cover (L, H) of a base graph. The four defining axioms:
///   partition   - the lists are pairwise disjoint and jointly hold every
///                 cover vertex mentioned anywhere
///   locality    - a cross edge between L(u) and L(v) exists only if uv is a
///                 base edge
///   clique      - H restricted to each list is complete
///   matching    - for each base edge uv, the H-edges between L(u) and L(v)
///                 form a matching
///
/// Intra-list cliques are implicit: h_edges stores cross edges only, and
/// same-list distinctness counts as adjacency everywhere in the toolkit.
/// Cover-vertex ids are arbitrary distinct nonnegative integers; the
/// constructors in this library emit each list as a contiguous id range.
struct Cover {
    Graph base;
    std::vector<std::vector<int>> lists;       // sorted ids per base vertex
    std::vector<std::pair<int, int>> h_edges;  // cross edges, x < y, sorted

    int list_size(int u) const { return static_cast<int>(lists[u].size()); }

    bool operator==(const Cover& o) const {
        return base == o.base && lists == o.lists && h_edges == o.h_edges;
    }
};

/// Lookup structures derived from a Cover; built on demand by consumers.
struct CoverIndex {
    int owner_of(int id) const;                   // base vertex, -1 if unknown
    int slot_of(int id) const;                    // position within its list
    bool cross_adjacent(int x, int y) const;
    const std::vector<std::pair<int, int>>& cross_neighbors(int id) const;  // (base vertex, id)

    explicit CoverIndex(const Cover& c);

private:
    std::vector<std::pair<int, int>> owner_slot_;  // sorted by id
    std::vector<int> ids_;
    std::vector<std::vector<std::pair<int, int>>> adj_;  // parallel to ids_
    std::vector<std::pair<int, int>> edge_set_;
    static const std::vector<std::pair<int, int>> empty_;
};

struct CoverViolation {
    std::string axiom;   // "partition" | "locality" | "intra-list clique" | "cross-matching"
    std::string detail;
};

struct CoverValidation {
    std::vector<CoverViolation> violations;
    std::vector<int> empty_lists;  // informational: unsatisfiable, not invalid
    bool ok() const { return violations.empty(); }
};

/// How to read Cover::h_edges during validation.
enum class CliqueRep {
    implicit_cliques,  // canonical form: intra-list edges must not be stored
    explicit_full      // h_edges is all of E(H): intra-list cliques are checked
};

/// Checks the four cover axioms; violations are data, not errors.
CoverValidation validate_cover(const Cover& c, CliqueRep rep = CliqueRep::implicit_cliques);

/// An (L,H)-coloring candidate: chosen[u] is the cover vertex picked for base
/// vertex u. Valid iff chosen[u] lies in L(u) and the picks are pairwise
/// nonadjacent in H.
using Transversal = std::vector<int>;

/// Per-vertex sets of abstract color ids.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

/// Cover built from a list assignment, keeping the (vertex, color) provenance:
/// cover vertex offsets[u] + i carries the i-th smallest color of L(u).
struct ListCover {
    Cover cover;
    std::vector<std::vector<int>> slot_colors;  // sorted colors per vertex
    std::vector<int> offsets;                   // first id of each list

    int id_of(int u, int color) const;          // -1 if color not listed
    int color_of(int id) const;
};

/// The standard list -> cover reduction: cross edges join equal colors across
/// base edges. Transversals of the result correspond one-to-one to proper
/// list colorings. Requires every list nonempty.
ListCover cover_from_lists(const Graph& g, const ListAssignment& L);

/// Bijection between transversals and proper list colorings (both directions
/// throw std::invalid_argument on invalid input).
std::vector<int> transversal_to_list_coloring(const ListCover& lc, const Transversal& t);
Transversal list_coloring_to_transversal(const ListCover& lc, const std::vector<int>& coloring);

/// Result of removing chosen cover vertices and their base vertices.
/// base_vertices maps new base index -> original base index; cover-vertex ids
/// are preserved, so a transversal of `cover` united with the chosen set is a
/// transversal of the original cover.
struct RestrictedCover {
    Cover cover;
    std::vector<int> base_vertices;
    std::vector<int> emptied;  // original base vertices whose lists became empty
};

/// Removes the chosen vertices' base vertices and strips every remaining list
/// of its H-neighbors of the chosen set. The chosen set must be independent
/// in H with at most one vertex per list (std::invalid_argument otherwise).
/// Emptied lists are reported, not fatal: the restricted instance is then
/// trivially unsatisfiable.
RestrictedCover remove_and_restrict(const Cover& c, const std::vector<int>& chosen);

/// Extends every base edge's matching to a perfect matching, pairing lowest
/// free slots first. Requires all lists the same size. Adding H-edges only
/// removes transversals, so worst-case covers always have this form.
Cover complete_matchings(const Cover& c);

/// Cover isomorphism that permutes positions within each list: the element at
/// slot i of list u moves to slot perms[u][i]. Lists keep their id sets;
/// edges are rewritten. Satisfiability is invariant.
Cover permute_within_lists(const Cover& c, const std::vector<std::vector<int>>& perms);

/// Relabels within lists so that every matching along a canonical spanning
/// forest (breadth-first from the lowest vertex of each component) maps slot
/// i to slot i. Requires uniform list size and perfect matchings everywhere.
Cover gauge_fix(const Cover& c);

/// The normalized cover family for (g, k): lists are [u*k, (u+1)*k), forest
/// edges carry the identity matching, and each non-forest edge carries an
/// arbitrary slot permutation. Every cover with lists of size k reduces to a
/// member by matching completion plus gauge fixing, so quantifying over this
/// family decides DP k-colorability. Size = (k!)^(m - n + components).
struct CoverFamily {
    Graph base;
    int k = 1;
    std::vector<std::pair<int, int>> forest_edges;
    std::vector<std::pair<int, int>> free_edges;

    /// (k!)^free_edges.size(); throws resource_limit_error on overflow.
    long long count() const;

    /// Deterministic indexing: mixed-radix over free edges (first edge most
    /// significant), digit = lexicographic rank of the slot permutation.
    Cover at(long long index) const;
};

/// Builds the family; requires k >= 1.
CoverFamily enumerate_covers(const Graph& g, int k);

} // namespace dpcolor

#endif
