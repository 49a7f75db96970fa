#include "dpcolor/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

// Flat view of a cover for search: per (vertex, slot), cross neighbors as
// (vertex, slot) pairs. Slot domains fit in one word; lists above 64 slots
// fall back to the portable path below via the wide-domain check.
struct SearchView {
    int n = 0;
    std::vector<int> list_size;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> cross;  // [u][slot] -> (v, slot)

    explicit SearchView(const Cover& c) {
        n = c.base.n;
        list_size.resize(n);
        cross.resize(n);
        for (int u = 0; u < n; ++u) {
            list_size[u] = c.list_size(u);
            cross[u].resize(list_size[u]);
        }
        CoverIndex idx(c);
        for (auto [x, y] : c.h_edges) {
            int u = idx.owner_of(x), v = idx.owner_of(y);
            if (u < 0 || v < 0)
                throw std::invalid_argument("find_transversal: H-edge endpoint outside all lists");
            if (u == v)
                throw std::invalid_argument(
                    "find_transversal: cover stores an explicit intra-list edge");
            cross[u][idx.slot_of(x)].push_back({v, idx.slot_of(y)});
            cross[v][idx.slot_of(y)].push_back({u, idx.slot_of(x)});
        }
    }
};

struct Searcher {
    const SearchView& view;
    long long node_cap;
    SolveStats stats;
    std::vector<std::uint64_t> domain;  // bitmask of live slots per vertex
    std::vector<int> chosen;            // slot per vertex, -1 while open
    std::vector<std::vector<std::pair<int, int>>> trail;  // (vertex, slot) removals per depth

    Searcher(const SearchView& v, long long cap) : view(v), node_cap(cap) {
        domain.resize(view.n);
        chosen.assign(view.n, -1);
        trail.resize(view.n + 1);
        for (int u = 0; u < view.n; ++u)
            domain[u] = view.list_size[u] >= 64 ? ~0ULL
                                                : ((1ULL << view.list_size[u]) - 1);
    }

    bool assign(int depth, int u, int slot) {
        chosen[u] = slot;
        for (auto [v, t] : view.cross[u][slot]) {
            if (chosen[v] != -1) continue;
            if (domain[v] & (1ULL << t)) {
                domain[v] &= ~(1ULL << t);
                trail[depth].push_back({v, t});
                if (domain[v] == 0) return false;
            }
        }
        return true;
    }

    void undo(int depth, int u) {
        chosen[u] = -1;
        for (auto [v, t] : trail[depth]) domain[v] |= (1ULL << t);
        trail[depth].clear();
    }

    bool solve(int depth) {
        ++stats.nodes;
        if (stats.nodes > node_cap)
            throw resource_limit_error("find_transversal: node cap exceeded");
        stats.max_depth = std::max(stats.max_depth, depth);
        int best = -1, best_count = 0;
        for (int u = 0; u < view.n; ++u) {
            if (chosen[u] != -1) continue;
            int cnt = std::popcount(domain[u]);
            if (best == -1 || cnt < best_count) {
                best = u;
                best_count = cnt;
            }
        }
        if (best == -1) return true;
        std::uint64_t live = domain[best];
        while (live) {
            int slot = std::countr_zero(live);
            live &= live - 1;
            if (assign(depth, best, slot) && solve(depth + 1)) return true;
            undo(depth, best);
        }
        return false;
    }
};

} // namespace

SolveResult find_transversal(const Cover& c, long long node_cap) {
    for (int u = 0; u < c.base.n; ++u)
        if (c.list_size(u) > 64)
            throw resource_limit_error("find_transversal: lists above 64 slots unsupported");
    SearchView view(c);
    SolveResult res;
    res.stats.nodes = 1;
    if (view.n == 0) {
        res.satisfiable = true;
        res.witness = Transversal{};
        return res;
    }
    for (int u = 0; u < view.n; ++u)
        if (view.list_size[u] == 0) {
            res.satisfiable = false;  // an empty list admits no transversal
            return res;
        }
    Searcher s(view, node_cap);
    s.stats.nodes = 0;
    bool sat = s.solve(0);
    res.stats = s.stats;
    res.satisfiable = sat;
    if (sat) {
        Transversal t(view.n);
        for (int u = 0; u < view.n; ++u) t[u] = c.lists[u][s.chosen[u]];
        res.witness = std::move(t);
    }
    return res;
}

bool check_transversal(const Cover& c, const Transversal& t) {
    if (static_cast<int>(t.size()) != c.base.n) return false;
    for (int u = 0; u < c.base.n; ++u)
        if (!std::binary_search(c.lists[u].begin(), c.lists[u].end(), t[u])) return false;
    std::vector<std::pair<int, int>> edges = c.h_edges;
    std::sort(edges.begin(), edges.end());
    for (int u = 0; u < c.base.n; ++u)
        for (int v = u + 1; v < c.base.n; ++v) {
            if (t[u] == t[v]) return false;
            std::pair<int, int> e{std::min(t[u], t[v]), std::max(t[u], t[v])};
            if (std::binary_search(edges.begin(), edges.end(), e)) return false;
        }
    return true;
}

SolveResult greedy_transversal(const Cover& c, const DegeneracyOrder& order) {
    const int n = c.base.n;
    if (static_cast<int>(order.ordering.size()) != n)
        throw std::invalid_argument("greedy_transversal: ordering length mismatch");
    for (int u = 0; u < n; ++u)
        if (c.list_size(u) < order.d + 1)
            throw std::invalid_argument("greedy_transversal: list at vertex " +
                                        std::to_string(u) + " smaller than degeneracy + 1");
    CoverIndex idx(c);
    std::vector<int> pick(n, -1);
    SolveResult res;
    for (int u : order.ordering) {
        int choice = -1;
        for (int x : c.lists[u]) {
            bool blocked = false;
            for (auto [v, y] : idx.cross_neighbors(x))
                if (pick[v] == y) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                choice = x;
                break;
            }
        }
        if (choice == -1)
            throw std::invalid_argument(
                "greedy_transversal: no free list element; cover violates the matching axiom");
        pick[u] = choice;
        ++res.stats.nodes;
    }
    res.stats.max_depth = n;
    res.satisfiable = true;
    res.witness = Transversal(pick.begin(), pick.end());
    return res;
}

DpDecision is_dp_colorable_at(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("is_dp_colorable_at: k must be >= 1");
    CoverFamily fam = enumerate_covers(g, k);
    long long total = fam.count();
    if (total > opts.cover_cap)
        throw resource_limit_error("is_dp_colorable_at: family of " + std::to_string(total) +
                                   " covers exceeds the cover cap");
    DpDecision dec;
    dec.covers = total;

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || total < 64) {
        for (long long i = 0; i < total; ++i) {
            Cover c = fam.at(i);
            SolveResult r = find_transversal(c, opts.node_cap);
            if (!r.satisfiable) {
                dec.colorable = false;
                dec.refuting_index = i;
                dec.refuting_cover = std::move(c);
                return dec;
            }
        }
        dec.colorable = true;
        return dec;
    }

    // Contiguous chunks with atomic lowest-index tracking. A worker skips an
    // index only when it cannot beat a refutation or error already found at a
    // lower index, so every index below the final minimum is fully processed
    // and the outcome matches the sequential scan exactly, for any jobs value.
    std::atomic<long long> best(total);
    std::atomic<long long> err_at(total);
    std::mutex err_mutex;
    std::exception_ptr err;
    long long chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        long long lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi]() {
            for (long long i = lo; i < hi; ++i) {
                if (i >= best.load(std::memory_order_relaxed) ||
                    i >= err_at.load(std::memory_order_relaxed))
                    break;
                try {
                    SolveResult r = find_transversal(fam.at(i), opts.node_cap);
                    if (!r.satisfiable) {
                        long long cur = best.load(std::memory_order_relaxed);
                        while (i < cur &&
                               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                        }
                        break;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (i < err_at.load(std::memory_order_relaxed)) {
                        err_at.store(i, std::memory_order_relaxed);
                        err = std::current_exception();
                    }
                    break;
                }
            }
        });
    }
    for (auto& t : workers) t.join();

    long long found = best.load();
    if (err && err_at.load() < found) std::rethrow_exception(err);
    if (found < total) {
        dec.colorable = false;
        dec.refuting_index = found;
        dec.refuting_cover = fam.at(found);
    } else {
        dec.colorable = true;
    }
    return dec;
}

int chi_dp(const Graph& g, const SolveOptions& opts) {
    if (g.n == 0) return 0;
    int lo = chromatic_number(g, opts.node_cap);
    int hi = degeneracy(g).d + 1;
    for (int k = lo; k < hi; ++k)
        if (is_dp_colorable_at(g, k, opts).colorable) return k;
    return hi;  // lists of size degeneracy + 1 always admit a greedy transversal
}

} // namespace dpcolor
