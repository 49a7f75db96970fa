#ifndef DPCOLOR_GRAPH_HPP
#define DPCOLOR_GRAPH_HPP

#include <utility>
#include <vector>

namespace dpcolor {

/// Default budget for exact searches (number of search-tree nodes).
inline constexpr long long default_node_cap = 50'000'000;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Invariants (enforced by make_graph and the named constructors):
///   - no loops, no multi-edges, all endpoints in [0, n)
///   - edges canonical: u < v, sorted lexicographically
///   - adj[v] sorted ascending, symmetric with the edge set
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

/// Builds a canonical Graph. Rejects out-of-range endpoints, loops and
/// duplicate edges with std::invalid_argument.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Join J(g, s): adds s new mutually adjacent vertices (labeled n..n+s-1),
/// each adjacent to every vertex of g. |E| grows by s*n + s*(s-1)/2.
Graph join(const Graph& g, int s);

Graph complete(int n);

/// Parts X = [0, a) and Y = [a, a+b).
Graph complete_bipartite(int a, int b);

/// Cycle 0-1-...-(n-1)-0; requires n >= 3.
Graph cycle(int n);

/// Path 0-1-...-(n-1).
Graph path(int n);

/// Graph with vertex v deleted; remaining vertices keep their relative order
/// (w > v becomes w-1).
Graph remove_vertex(const Graph& g, int v);

/// A vertex order witnessing the degeneracy d: replaying `ordering` from the
/// front, every vertex has at most d already-processed neighbors.
struct DegeneracyOrder {
    std::vector<int> ordering;
    int d = 0;
};

/// Exact degeneracy via smallest-last elimination (ties by lowest index).
DegeneracyOrder degeneracy(const Graph& g);

/// Minimum degree; requires n >= 1.
int min_degree(const Graph& g);

/// Exact chromatic number by branch and bound: greedy-clique lower bound,
/// greedy-coloring upper bound, then k-colorability search with vertices in
/// ascending index order. chi(empty) = 0, chi(edgeless) = 1.
/// Throws resource_limit_error if the search exceeds node_cap.
int chromatic_number(const Graph& g, long long node_cap = default_node_cap);

} // namespace dpcolor

#endif
