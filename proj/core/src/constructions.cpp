#include "dpcolor/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dpcolor/errors.hpp"

namespace dpcolor {

std::array<int, 3> HardInstance::decode(int cover_id) const {
    int kk = k * k;
    int u = cover_id / kk, rem = cover_id % kk;
    return {u, rem / k, rem % k};
}

HardInstance hard_instance(int n) {
    if (n % 2 != 0) throw std::invalid_argument("hard_instance: n must be even");
    if (n < 6) throw std::invalid_argument("hard_instance: n must be at least 6");

    HardInstance h;
    h.n = n;
    h.k = n / 2 - 1;
    h.a_size = h.k * h.k - 2;
    const int k = h.k, kk = k * k;
    const int x = 0, y = k + 1;
    auto xs = [&](int s) { return 1 + s; };
    auto yt = [&](int t) { return k + 2 + t; };
    const int a0 = 2 * (k + 1);
    const int nb = a0 + h.a_size;

    h.vertex_names.resize(nb);
    h.vertex_names[x] = "x";
    h.vertex_names[y] = "y";
    for (int s = 0; s < k; ++s) h.vertex_names[xs(s)] = "x" + std::to_string(s);
    for (int t = 0; t < k; ++t) h.vertex_names[yt(t)] = "y" + std::to_string(t);
    for (int a = 0; a < h.a_size; ++a) h.vertex_names[a0 + a] = "a" + std::to_string(a);

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u <= k; ++u)
        for (int v = k + 1; v <= 2 * k + 1; ++v) edges.emplace_back(u, v);
    for (int a = a0; a < nb; ++a)
        for (int v = 0; v < a; ++v) edges.emplace_back(v, a);
    h.base = make_graph(nb, std::move(edges));

    h.cover.base = h.base;
    h.cover.lists.resize(nb);
    for (int u = 0; u < nb; ++u) {
        h.cover.lists[u].resize(kk);
        std::iota(h.cover.lists[u].begin(), h.cover.lists[u].end(), u * kk);
    }
    auto cid = [&](int u, int i, int j) { return u * kk + i * k + j; };
    auto& he = h.cover.h_edges;

    // identity matchings from x, y, and every dominating vertex to all their
    // neighbors; when both endpoints qualify, the higher one emits so each
    // base edge carries exactly one matching
    std::vector<bool> special(nb, false);
    special[x] = special[y] = true;
    for (int a = a0; a < nb; ++a) special[a] = true;
    for (int u = 0; u < nb; ++u) {
        if (!special[u]) continue;
        for (int v : h.base.adj[u]) {
            if (special[v] && v > u) continue;
            for (int c = 0; c < kk; ++c) {
                int p = cid(u, 0, 0) + c, q = cid(v, 0, 0) + c;
                he.emplace_back(std::min(p, q), std::max(p, q));
            }
        }
    }
    // shifted matchings between the indexed part vertices
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    int p = cid(xs(s), i, j);
                    int q = cid(yt(t), (i + s) % k, (j + t) % k);
                    he.emplace_back(std::min(p, q), std::max(p, q));
                }
    std::sort(he.begin(), he.end());
    return h;
}

HardInstanceReport verify_hard_instance(int n, bool refute, const SolveOptions& opts) {
    HardInstance h = hard_instance(n);
    HardInstanceReport r;
    r.n = h.n;
    r.k = h.k;
    r.a_size = h.a_size;
    r.list_size = h.k * h.k;

    r.axioms_ok = validate_cover(h.cover).ok();

    CoverIndex idx(h.cover);
    r.matchings_perfect = true;
    for (auto [u, v] : h.base.edges) {
        int cnt = 0;
        for (int p : h.cover.lists[u])
            for (auto [w, q] : idx.cross_neighbors(p))
                if (w == v) ++cnt;
        if (cnt != r.list_size) {
            r.matchings_perfect = false;
            break;
        }
    }

    r.chi_join = chromatic_number(h.base, opts.node_cap);
    r.list_size_equals_chi = (r.list_size == r.chi_join) && (r.chi_join == 2 + r.a_size);

    if (refute) {
        r.refuted = true;
        r.refutation = find_transversal(h.cover, opts.node_cap);
    }
    return r;
}

} // namespace dpcolor
