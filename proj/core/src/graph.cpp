#include "dpcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dpcolor/errors.hpp"

namespace dpcolor {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_graph: endpoint (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range [0," +
                                        std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("make_graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        auto it = std::adjacent_find(edges.begin(), edges.end());
        throw std::invalid_argument("make_graph: duplicate edge (" + std::to_string(it->first) +
                                    "," + std::to_string(it->second) + ")");
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Graph join(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("join: negative clique size");
    auto edges = g.edges;
    for (int t = 0; t < s; ++t) {
        int v = g.n + t;
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }
    return make_graph(g.n + s, std::move(edges));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return make_graph(a + b, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return make_graph(n, std::move(edges));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return make_graph(std::max(n, 0), std::move(edges));
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("remove_vertex: out of range");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return make_graph(g.n - 1, std::move(edges));
}

DegeneracyOrder degeneracy(const Graph& g) {
    DegeneracyOrder out;
    std::vector<int> deg(g.n);
    std::vector<bool> removed(g.n, false);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> removal;
    removal.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        out.d = std::max(out.d, deg[best]);
        removed[best] = true;
        removal.push_back(best);
        for (int w : g.adj[best])
            if (!removed[w]) --deg[w];
    }
    out.ordering.assign(removal.rbegin(), removal.rend());
    return out;
}

int min_degree(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("min_degree: empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

namespace {

// Greedy coloring in ascending vertex order; returns the number of colors.
int greedy_coloring(const Graph& g) {
    std::vector<int> color(g.n, -1);
    int used = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<bool> taken(used + 1, false);
        for (int w : g.adj[v])
            if (color[w] >= 0) taken[color[w]] = true;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Greedy clique grown from each start vertex, biggest candidate degree first.
int greedy_clique(const Graph& g) {
    int best = 0;
    for (int start = 0; start < g.n; ++start) {
        std::vector<int> cand = g.adj[start];
        int size = 1;
        while (!cand.empty()) {
            int pick = cand[0];
            for (int v : cand)
                if (g.degree(v) > g.degree(pick)) pick = v;
            ++size;
            std::vector<int> next;
            for (int v : cand)
                if (v != pick && g.has_edge(v, pick)) next.push_back(v);
            cand = std::move(next);
        }
        best = std::max(best, size);
    }
    return best;
}

struct KColorSearch {
    const Graph& g;
    int k;
    long long nodes = 0;
    long long cap;
    std::vector<int> color;

    KColorSearch(const Graph& gg, int kk, long long cap_) : g(gg), k(kk), cap(cap_) {
        color.assign(g.n, -1);
    }

    bool run(int v, int max_used) {
        if (v == g.n) return true;
        if (++nodes > cap)
            throw resource_limit_error("chromatic_number: node cap exceeded");
        int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (run(v + 1, std::max(max_used, c))) return true;
            color[v] = -1;
        }
        return false;
    }
};

} // namespace

int chromatic_number(const Graph& g, long long node_cap) {
    if (g.n == 0) return 0;
    if (g.m() == 0) return 1;
    int ub = greedy_coloring(g);
    int lb = greedy_clique(g);
    long long nodes_left = node_cap;
    for (int k = lb; k < ub; ++k) {
        KColorSearch search(g, k, nodes_left);
        if (search.run(0, -1)) return k;
        nodes_left -= search.nodes;
        if (nodes_left <= 0) throw resource_limit_error("chromatic_number: node cap exceeded");
    }
    return ub;
}

} // namespace dpcolor
