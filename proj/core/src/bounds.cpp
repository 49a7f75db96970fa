#include "dpcolor/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpcolor {

BoundsReport zdp_upper(const Graph& g, long long node_cap) {
    BoundsReport b;
    b.n = g.n;
    b.m = g.m();
    b.k = chromatic_number(g, node_cap);
    b.delta = g.n > 0 ? min_degree(g) : 0;
    b.upper_basic = 3LL * b.m;
    b.refined_applicable = b.delta >= b.k - 1;
    b.refined_twice = 6LL * b.m - 3LL * (b.k - 1) * b.n;
    // floor for possibly negative doubled values (inapplicable cases only)
    b.upper_refined = b.refined_twice >= 0 ? b.refined_twice / 2
                                           : -((-b.refined_twice + 1) / 2);
    return b;
}

SigmaReport sigma_report(const Graph& g, long long a_size,
                         const std::vector<long long>& list_sizes,
                         long long a_list_min, int k) {
    if (static_cast<int>(list_sizes.size()) != g.n)
        throw std::invalid_argument("sigma_report: need one list size per vertex");
    if (a_size < 0) throw std::invalid_argument("sigma_report: negative |A|");
    SigmaReport r;
    r.a_size = a_size;
    r.k = k;
    r.per_vertex.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (list_sizes[v] <= 0)
            throw std::invalid_argument("sigma_report: nonpositive list size at vertex " +
                                        std::to_string(v));
        long long s = g.degree(v) + a_size - list_sizes[v] + 1;
        r.per_vertex[v] = std::max(s, 0LL);
        r.total += r.per_vertex[v];
    }
    r.condition_holds = 2 * a_size >= 3 * r.total;
    r.list_guard = a_size == 0 || a_list_min >= a_size + k;
    return r;
}

ZdpNBounds zdp_n_bounds(long long n) {
    if (n < 0) throw std::invalid_argument("zdp_n_bounds: negative n");
    ZdpNBounds b;
    b.upper = 3 * n * n / 2;
    if (n >= 6 && n % 2 == 0) b.lower = n * n / 4 - n;
    return b;
}

bool chi_equals_chidp_guaranteed(long long n, long long r) {
    if (r < 0 || r > n)
        throw std::invalid_argument("chi_equals_chidp_guaranteed: need 0 <= r <= n");
    return 2 * r - n >= 6 * (n - r) * (n - r);
}

std::optional<int> zdp_exact(const Graph& g, int s_max, const SolveOptions& opts) {
    if (s_max < 0) throw std::invalid_argument("zdp_exact: negative s_max");
    for (int s = 0; s <= s_max; ++s) {
        Graph j = join(g, s);
        int chi = chromatic_number(j, opts.node_cap);
        if (chi_dp(j, opts) == chi) return s;
    }
    return std::nullopt;
}

} // namespace dpcolor
