#include "dpcolor/cover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "dpcolor/errors.hpp"

namespace dpcolor {

const std::vector<std::pair<int, int>> CoverIndex::empty_{};

CoverIndex::CoverIndex(const Cover& c) {
    std::vector<std::pair<int, std::pair<int, int>>> entries;  // id -> (owner, slot)
    for (int u = 0; u < static_cast<int>(c.lists.size()); ++u)
        for (int s = 0; s < c.list_size(u); ++s)
            entries.push_back({c.lists[u][s], {u, s}});
    std::sort(entries.begin(), entries.end());
    ids_.reserve(entries.size());
    owner_slot_.reserve(entries.size());
    for (auto& [id, os] : entries) {
        ids_.push_back(id);
        owner_slot_.push_back(os);
    }
    adj_.assign(ids_.size(), {});
    edge_set_ = c.h_edges;
    std::sort(edge_set_.begin(), edge_set_.end());
    edge_set_.erase(std::unique(edge_set_.begin(), edge_set_.end()), edge_set_.end());
    for (auto [x, y] : edge_set_) {
        auto ix = std::lower_bound(ids_.begin(), ids_.end(), x);
        auto iy = std::lower_bound(ids_.begin(), ids_.end(), y);
        if (ix == ids_.end() || *ix != x || iy == ids_.end() || *iy != y) continue;
        std::size_t px = ix - ids_.begin(), py = iy - ids_.begin();
        adj_[px].push_back({owner_slot_[py].first, y});
        adj_[py].push_back({owner_slot_[px].first, x});
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int CoverIndex::owner_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return owner_slot_[it - ids_.begin()].first;
}

int CoverIndex::slot_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return owner_slot_[it - ids_.begin()].second;
}

bool CoverIndex::cross_adjacent(int x, int y) const {
    std::pair<int, int> e{std::min(x, y), std::max(x, y)};
    return std::binary_search(edge_set_.begin(), edge_set_.end(), e);
}

const std::vector<std::pair<int, int>>& CoverIndex::cross_neighbors(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return empty_;
    return adj_[it - ids_.begin()];
}

namespace {

std::string id_str(int x) { return std::to_string(x); }

std::string edge_str(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

CoverValidation validate_cover(const Cover& c, CliqueRep rep) {
    CoverValidation out;
    const int n = static_cast<int>(c.lists.size());
    if (n != c.base.n) {
        out.violations.push_back(
            {"partition", "cover has " + id_str(n) + " lists for a base graph on " +
                              id_str(c.base.n) + " vertices"});
        return out;
    }

    std::map<int, int> owner;
    for (int u = 0; u < n; ++u) {
        if (c.lists[u].empty()) out.empty_lists.push_back(u);
        for (int x : c.lists[u]) {
            auto [it, fresh] = owner.insert({x, u});
            if (!fresh)
                out.violations.push_back(
                    {"partition", "cover vertex " + id_str(x) + " appears in L(" +
                                      id_str(it->second) + ") and L(" + id_str(u) + ")"});
        }
    }

    auto edges = c.h_edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // endpoints per base-edge, for the matching axiom
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> per_base_edge;
    std::set<std::pair<int, int>> intra_present;  // explicit_full mode

    for (auto [x, y] : edges) {
        auto ox = owner.find(x), oy = owner.find(y);
        if (ox == owner.end() || oy == owner.end()) {
            out.violations.push_back(
                {"partition", "H-edge " + edge_str(x, y) + " touches a vertex outside all lists"});
            continue;
        }
        int u = ox->second, v = oy->second;
        if (x == y) {
            out.violations.push_back({"partition", "H-edge " + edge_str(x, y) + " is a loop"});
            continue;
        }
        if (u == v) {
            if (rep == CliqueRep::implicit_cliques)
                out.violations.push_back(
                    {"intra-list clique",
                     "explicit intra-list edge " + edge_str(x, y) + " stored in L(" + id_str(u) +
                         "); cliques are implicit in this representation"});
            else
                intra_present.insert({std::min(x, y), std::max(x, y)});
            continue;
        }
        if (!c.base.has_edge(u, v)) {
            out.violations.push_back(
                {"locality", "H-edge " + edge_str(x, y) + " joins L(" + id_str(u) + ") and L(" +
                                 id_str(v) + ") but the base graph has no edge " +
                                 edge_str(u, v)});
            continue;
        }
        per_base_edge[{std::min(u, v), std::max(u, v)}].push_back({x, y});
    }

    if (rep == CliqueRep::explicit_full) {
        for (int u = 0; u < n; ++u) {
            const auto& L = c.lists[u];
            for (std::size_t i = 0; i < L.size(); ++i)
                for (std::size_t j = i + 1; j < L.size(); ++j) {
                    std::pair<int, int> e{std::min(L[i], L[j]), std::max(L[i], L[j])};
                    if (!intra_present.count(e))
                        out.violations.push_back(
                            {"intra-list clique", "missing intra-list edge " +
                                                      edge_str(e.first, e.second) + " in L(" +
                                                      id_str(u) + ")"});
                }
        }
    }

    for (auto& [be, es] : per_base_edge) {
        std::set<int> seen;
        for (auto [x, y] : es) {
            if (!seen.insert(x).second)
                out.violations.push_back(
                    {"cross-matching", "cover vertex " + id_str(x) +
                                           " carries two H-edges toward L(" +
                                           id_str(be.first) + ")-L(" + id_str(be.second) + ")"});
            if (!seen.insert(y).second)
                out.violations.push_back(
                    {"cross-matching", "cover vertex " + id_str(y) +
                                           " carries two H-edges toward L(" +
                                           id_str(be.first) + ")-L(" + id_str(be.second) + ")"});
        }
    }
    return out;
}

int ListCover::id_of(int u, int color) const {
    const auto& sc = slot_colors[u];
    auto it = std::lower_bound(sc.begin(), sc.end(), color);
    if (it == sc.end() || *it != color) return -1;
    return offsets[u] + static_cast<int>(it - sc.begin());
}

int ListCover::color_of(int id) const {
    // offsets is increasing; find the owning list.
    auto it = std::upper_bound(offsets.begin(), offsets.end(), id);
    int u = static_cast<int>(it - offsets.begin()) - 1;
    if (u < 0 || u >= static_cast<int>(slot_colors.size())) return -1;
    int slot = id - offsets[u];
    if (slot < 0 || slot >= static_cast<int>(slot_colors[u].size())) return -1;
    return slot_colors[u][slot];
}

ListCover cover_from_lists(const Graph& g, const ListAssignment& L) {
    if (static_cast<int>(L.lists.size()) != g.n)
        throw std::invalid_argument("cover_from_lists: need one list per vertex");
    ListCover lc;
    lc.cover.base = g;
    lc.slot_colors.resize(g.n);
    lc.offsets.resize(g.n);
    int next = 0;
    for (int u = 0; u < g.n; ++u) {
        auto colors = L.lists[u];
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (colors.empty())
            throw std::invalid_argument("cover_from_lists: empty list at vertex " +
                                        std::to_string(u));
        lc.slot_colors[u] = std::move(colors);
        lc.offsets[u] = next;
        next += static_cast<int>(lc.slot_colors[u].size());
    }
    lc.cover.lists.resize(g.n);
    for (int u = 0; u < g.n; ++u) {
        lc.cover.lists[u].resize(lc.slot_colors[u].size());
        std::iota(lc.cover.lists[u].begin(), lc.cover.lists[u].end(), lc.offsets[u]);
    }
    for (auto [u, v] : g.edges)
        for (int c : lc.slot_colors[u]) {
            int iv = lc.id_of(v, c);
            if (iv >= 0) lc.cover.h_edges.emplace_back(lc.id_of(u, c), iv);
        }
    for (auto& [x, y] : lc.cover.h_edges)
        if (x > y) std::swap(x, y);
    std::sort(lc.cover.h_edges.begin(), lc.cover.h_edges.end());
    return lc;
}

std::vector<int> transversal_to_list_coloring(const ListCover& lc, const Transversal& t) {
    const Graph& g = lc.cover.base;
    if (static_cast<int>(t.size()) != g.n)
        throw std::invalid_argument("transversal_to_list_coloring: wrong length");
    for (int u = 0; u < g.n; ++u) {
        const auto& L = lc.cover.lists[u];
        if (!std::binary_search(L.begin(), L.end(), t[u]))
            throw std::invalid_argument("transversal_to_list_coloring: choice for vertex " +
                                        std::to_string(u) + " is outside its list");
    }
    std::set<std::pair<int, int>> edges(lc.cover.h_edges.begin(), lc.cover.h_edges.end());
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (edges.count({std::min(t[u], t[v]), std::max(t[u], t[v])}))
                throw std::invalid_argument(
                    "transversal_to_list_coloring: choices for vertices " + std::to_string(u) +
                    " and " + std::to_string(v) + " are adjacent in H");
    std::vector<int> coloring(g.n);
    for (int u = 0; u < g.n; ++u) coloring[u] = lc.color_of(t[u]);
    return coloring;
}

Transversal list_coloring_to_transversal(const ListCover& lc, const std::vector<int>& coloring) {
    const Graph& g = lc.cover.base;
    if (static_cast<int>(coloring.size()) != g.n)
        throw std::invalid_argument("list_coloring_to_transversal: wrong length");
    Transversal t(g.n);
    for (int u = 0; u < g.n; ++u) {
        int id = lc.id_of(u, coloring[u]);
        if (id < 0)
            throw std::invalid_argument("list_coloring_to_transversal: color " +
                                        std::to_string(coloring[u]) +
                                        " is not on the list of vertex " + std::to_string(u));
        t[u] = id;
    }
    for (auto [u, v] : g.edges)
        if (coloring[u] == coloring[v])
            throw std::invalid_argument("list_coloring_to_transversal: improper at edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
    return t;
}

RestrictedCover remove_and_restrict(const Cover& c, const std::vector<int>& chosen) {
    CoverIndex idx(c);
    const int n = c.base.n;

    std::vector<int> removed_base;
    for (int x : chosen) {
        int u = idx.owner_of(x);
        if (u < 0)
            throw std::invalid_argument("remove_and_restrict: unknown cover vertex " +
                                        std::to_string(x));
        removed_base.push_back(u);
    }
    {
        auto sorted = removed_base;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("remove_and_restrict: two chosen vertices in one list");
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if (idx.cross_adjacent(chosen[i], chosen[j]))
                throw std::invalid_argument("remove_and_restrict: chosen set not independent (" +
                                            std::to_string(chosen[i]) + "," +
                                            std::to_string(chosen[j]) + ")");

    std::vector<bool> base_gone(n, false);
    for (int u : removed_base) base_gone[u] = true;
    std::set<int> dropped_ids;
    for (int x : chosen)
        for (auto [v, y] : idx.cross_neighbors(x))
            if (!base_gone[v]) dropped_ids.insert(y);

    RestrictedCover out;
    std::vector<int> new_index(n, -1);
    for (int u = 0; u < n; ++u) {
        if (base_gone[u]) continue;
        new_index[u] = static_cast<int>(out.base_vertices.size());
        out.base_vertices.push_back(u);
    }
    std::vector<std::pair<int, int>> base_edges;
    for (auto [u, v] : c.base.edges)
        if (!base_gone[u] && !base_gone[v]) base_edges.emplace_back(new_index[u], new_index[v]);
    out.cover.base = make_graph(static_cast<int>(out.base_vertices.size()), std::move(base_edges));

    out.cover.lists.resize(out.base_vertices.size());
    for (std::size_t i = 0; i < out.base_vertices.size(); ++i) {
        for (int x : c.lists[out.base_vertices[i]])
            if (!dropped_ids.count(x)) out.cover.lists[i].push_back(x);
        if (out.cover.lists[i].empty()) out.emptied.push_back(out.base_vertices[i]);
    }
    for (auto [x, y] : c.h_edges) {
        int u = idx.owner_of(x), v = idx.owner_of(y);
        if (u < 0 || v < 0 || base_gone[u] || base_gone[v]) continue;
        if (dropped_ids.count(x) || dropped_ids.count(y)) continue;
        out.cover.h_edges.emplace_back(x, y);
    }
    std::sort(out.cover.h_edges.begin(), out.cover.h_edges.end());
    return out;
}

Cover complete_matchings(const Cover& c) {
    const int n = c.base.n;
    if (n > 0) {
        std::size_t k = c.lists[0].size();
        for (const auto& L : c.lists)
            if (L.size() != k)
                throw std::invalid_argument("complete_matchings: lists must share one size");
    }
    CoverIndex idx(c);
    Cover out = c;
    for (auto [u, v] : c.base.edges) {
        std::vector<bool> used_u(c.lists[u].size(), false), used_v(c.lists[v].size(), false);
        for (int x : c.lists[u])
            for (auto [w, y] : idx.cross_neighbors(x))
                if (w == v) {
                    if (used_u[idx.slot_of(x)] || used_v[idx.slot_of(y)])
                        throw std::invalid_argument("complete_matchings: input edge set is not "
                                                    "a matching between L(" + std::to_string(u) +
                                                    ") and L(" + std::to_string(v) + ")");
                    used_u[idx.slot_of(x)] = true;
                    used_v[idx.slot_of(y)] = true;
                }
        std::size_t j = 0;
        for (std::size_t i = 0; i < used_u.size(); ++i) {
            if (used_u[i]) continue;
            while (j < used_v.size() && used_v[j]) ++j;
            int x = c.lists[u][i], y = c.lists[v][j];
            out.h_edges.emplace_back(std::min(x, y), std::max(x, y));
            used_v[j] = true;
        }
    }
    std::sort(out.h_edges.begin(), out.h_edges.end());
    out.h_edges.erase(std::unique(out.h_edges.begin(), out.h_edges.end()), out.h_edges.end());
    return out;
}

Cover permute_within_lists(const Cover& c, const std::vector<std::vector<int>>& perms) {
    const int n = static_cast<int>(c.lists.size());
    if (static_cast<int>(perms.size()) != n)
        throw std::invalid_argument("permute_within_lists: need one permutation per list");
    // remap[old id] = new id within the same list
    std::map<int, int> remap;
    for (int u = 0; u < n; ++u) {
        const auto& L = c.lists[u];
        const auto& p = perms[u];
        if (p.size() != L.size())
            throw std::invalid_argument("permute_within_lists: permutation size mismatch at " +
                                        std::to_string(u));
        std::vector<bool> seen(L.size(), false);
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (p[i] < 0 || p[i] >= static_cast<int>(L.size()) || seen[p[i]])
                throw std::invalid_argument("permute_within_lists: not a permutation at " +
                                            std::to_string(u));
            seen[p[i]] = true;
            remap[L[i]] = L[p[i]];
        }
    }
    Cover out = c;
    for (auto& [x, y] : out.h_edges) {
        x = remap.at(x);
        y = remap.at(y);
        if (x > y) std::swap(x, y);
    }
    std::sort(out.h_edges.begin(), out.h_edges.end());
    return out;
}

namespace {

struct Forest {
    std::vector<int> parent;          // -1 for roots
    std::vector<int> bfs_order;
    std::vector<char> edge_in_forest; // parallel to base.edges
};

Forest bfs_forest(const Graph& g) {
    Forest f;
    f.parent.assign(g.n, -1);
    f.edge_in_forest.assign(g.edges.size(), 0);
    std::vector<bool> visited(g.n, false);
    auto edge_index = [&](int u, int v) {
        auto e = std::minmax(u, v);
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(),
                                   std::make_pair(e.first, e.second));
        return static_cast<int>(it - g.edges.begin());
    };
    for (int start = 0; start < g.n; ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            f.bfs_order.push_back(u);
            for (int w : g.adj[u]) {
                if (visited[w]) continue;
                visited[w] = true;
                f.parent[w] = u;
                f.edge_in_forest[edge_index(u, w)] = 1;
                q.push(w);
            }
        }
    }
    return f;
}

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Lexicographic unranking over image sequences; rank 0 is the identity.
std::vector<int> unrank_permutation(int k, long long rank) {
    std::vector<int> avail(k);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm;
    perm.reserve(k);
    long long f = factorial(k - 1);
    for (int pos = k; pos > 0; --pos) {
        long long idx = (pos > 1) ? rank / f : rank;
        perm.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
        if (pos > 1) {
            rank %= f;
            f /= (pos - 1);
        }
    }
    return perm;
}

} // namespace

Cover gauge_fix(const Cover& c) {
    const int n = c.base.n;
    std::size_t k = n > 0 ? c.lists[0].size() : 0;
    for (const auto& L : c.lists)
        if (L.size() != k) throw std::invalid_argument("gauge_fix: lists must share one size");

    CoverIndex idx(c);
    // matchings must be perfect so tree propagation determines each relabeling
    for (auto [u, v] : c.base.edges) {
        std::size_t cnt = 0;
        for (int x : c.lists[u])
            for (auto [w, y] : idx.cross_neighbors(x))
                if (w == v) ++cnt;
        if (cnt != k)
            throw std::invalid_argument("gauge_fix: matching between L(" + std::to_string(u) +
                                        ") and L(" + std::to_string(v) + ") is not perfect");
    }

    Forest f = bfs_forest(c.base);
    std::vector<std::vector<int>> rho(n);
    for (int u : f.bfs_order) {
        rho[u].assign(k, 0);
        if (f.parent[u] == -1) {
            std::iota(rho[u].begin(), rho[u].end(), 0);
            continue;
        }
        int p = f.parent[u];
        for (int x : c.lists[p])
            for (auto [w, y] : idx.cross_neighbors(x))
                if (w == u) rho[u][idx.slot_of(y)] = rho[p][idx.slot_of(x)];
    }
    return permute_within_lists(c, rho);
}

long long CoverFamily::count() const {
    if (k > 20 && !free_edges.empty())
        throw resource_limit_error("enumerate_covers: family size overflows");
    long long f = 1;
    for (int i = 2; i <= k && i <= 20; ++i) f *= i;
    long long total = 1;
    for (std::size_t e = 0; e < free_edges.size(); ++e) {
        if (total > (std::numeric_limits<long long>::max)() / f)
            throw resource_limit_error("enumerate_covers: family size overflows");
        total *= f;
    }
    return total;
}

Cover CoverFamily::at(long long index) const {
    long long total = count();
    if (index < 0 || index >= total)
        throw std::invalid_argument("CoverFamily::at: index out of range");
    long long f = 1;
    for (int i = 2; i <= k && i <= 20; ++i) f *= i;  // count() threw if this could matter

    std::vector<long long> digit(free_edges.size(), 0);
    for (std::size_t e = free_edges.size(); e-- > 0;) {
        digit[e] = index % f;
        index /= f;
    }

    Cover c;
    c.base = base;
    c.lists.resize(base.n);
    for (int u = 0; u < base.n; ++u) {
        c.lists[u].resize(k);
        std::iota(c.lists[u].begin(), c.lists[u].end(), u * k);
    }
    for (auto [u, v] : forest_edges)
        for (int i = 0; i < k; ++i)
            c.h_edges.emplace_back(std::min(u * k + i, v * k + i),
                                   std::max(u * k + i, v * k + i));
    for (std::size_t e = 0; e < free_edges.size(); ++e) {
        auto [u, v] = free_edges[e];
        auto perm = unrank_permutation(k, digit[e]);
        for (int i = 0; i < k; ++i)
            c.h_edges.emplace_back(std::min(u * k + i, v * k + perm[i]),
                                   std::max(u * k + i, v * k + perm[i]));
    }
    std::sort(c.h_edges.begin(), c.h_edges.end());
    return c;
}

CoverFamily enumerate_covers(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("enumerate_covers: k must be >= 1");
    CoverFamily fam;
    fam.base = g;
    fam.k = k;
    Forest f = bfs_forest(g);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        (f.edge_in_forest[e] ? fam.forest_edges : fam.free_edges).push_back(g.edges[e]);
    return fam;
}

} // namespace dpcolor
