#ifndef DPCOLOR_CONSTRUCTIONS_HPP
#define DPCOLOR_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// The quadratic lower-bound instance: for even n >= 6 and k = n/2 - 1, a
/// cover of J(K_{n/2,n/2}, A) with |A| = k^2 - 2 in which every list has
/// exactly k^2 elements and no transversal exists.
///
/// Base vertex labeling: part X is x = 0, x_s = 1 + s; part Y is y = k + 1,
/// y_t = k + 2 + t; the |A| dominating vertices follow. Cover vertex (u, i, j)
/// with i, j in Z_k gets id u*k^2 + i*k + j.
///
/// H-edges (intra-list cliques implicit):
///   - (u,i,j) ~ (v,i,j)          for u in {x,y} or u in A, v a base neighbor
///   - (x_s,i,j) ~ (y_t,i+s,j+t)  indices mod k
struct HardInstance {
    int n = 0;       // even base parameter
    int k = 0;       // n/2 - 1
    int a_size = 0;  // k^2 - 2
    Graph base;      // J(K_{n/2,n/2}, A)
    Cover cover;
    std::vector<std::string> vertex_names;  // "x", "x0", .., "y", "y0", .., "a0", ..

    /// Decodes a cover-vertex id into (base vertex, i, j).
    std::array<int, 3> decode(int cover_id) const;
};

/// Builds the instance. Rejects odd n and n < 6 with std::invalid_argument.
HardInstance hard_instance(int n);

struct HardInstanceReport {
    int n = 0, k = 0, a_size = 0;
    bool axioms_ok = false;
    bool matchings_perfect = false;      // every base edge carries a perfect matching
    int list_size = 0;                   // k^2
    int chi_join = 0;                    // exact chromatic number of the base
    bool list_size_equals_chi = false;   // k^2 == chi(J) == 2 + |A|
    bool refuted = false;                // refutation was attempted
    std::optional<SolveResult> refutation;

    bool structure_ok() const { return axioms_ok && matchings_perfect && list_size_equals_chi; }
    bool certified_uncolorable() const {
        return refuted && refutation && !refutation->satisfiable;
    }
};

/// Structural verification (cover axioms, perfect matchings, list-size
/// arithmetic against the exact chromatic number), plus, when refute is set,
/// a complete-search certificate that no transversal exists.
HardInstanceReport verify_hard_instance(int n, bool refute, const SolveOptions& opts = {});

} // namespace dpcolor

#endif
