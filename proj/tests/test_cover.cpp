#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "dpcolor/cover.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/solver.hpp"
#include "oracles.hpp"

using namespace dpcolor;

namespace {

bool has_violation(const CoverValidation& v, const std::string& axiom) {
    return std::any_of(v.violations.begin(), v.violations.end(),
                       [&](const CoverViolation& x) { return x.axiom == axiom; });
}

} // namespace

TEST_CASE("validate_cover accepts a well-formed cover") {
    Cover c = oracles::random_cover(cycle(4), 2, 7);
    CoverValidation v = validate_cover(c);
    CHECK(v.ok());
    CHECK(v.empty_lists.empty());
}

TEST_CASE("validate_cover reports empty lists without failing") {
    Cover c = oracles::random_cover(path(3), 2, 1);
    c.h_edges.clear();
    c.lists[1].clear();
    CoverValidation v = validate_cover(c);
    CHECK(v.ok());
    CHECK(v.empty_lists == std::vector<int>{1});
}

TEST_CASE("validate_cover flags each axiom") {
    SUBCASE("partition: one id in two lists") {
        Cover c = oracles::random_cover(path(2), 2, 1);
        c.lists[1][0] = c.lists[0][0];
        CoverValidation v = validate_cover(c);
        CHECK_FALSE(v.ok());
        CHECK(has_violation(v, "partition"));
    }
    SUBCASE("partition: edge endpoint outside all lists") {
        Cover c = oracles::random_cover(path(2), 2, 1);
        c.h_edges.push_back({0, 99});
        std::sort(c.h_edges.begin(), c.h_edges.end());
        CoverValidation v = validate_cover(c);
        CHECK(has_violation(v, "partition"));
    }
    SUBCASE("locality: edge between lists of a base non-edge") {
        Cover c = oracles::random_cover(path(3), 2, 1);  // base 0-1-2, no 0-2 edge
        c.h_edges.push_back({c.lists[0][0], c.lists[2][0]});
        std::sort(c.h_edges.begin(), c.h_edges.end());
        CoverValidation v = validate_cover(c);
        CHECK(has_violation(v, "locality"));
    }
    SUBCASE("intra-list edge stored in canonical form") {
        Cover c = oracles::random_cover(path(2), 2, 1);
        c.h_edges.push_back({c.lists[0][0], c.lists[0][1]});
        std::sort(c.h_edges.begin(), c.h_edges.end());
        CoverValidation v = validate_cover(c);
        CHECK(has_violation(v, "intra-list clique"));
    }
    SUBCASE("cross-matching: one vertex matched twice toward a list") {
        Cover c = oracles::random_cover(path(2), 2, 1, 0.0);  // no cross edges yet
        c.h_edges = {{c.lists[0][0], c.lists[1][0]}, {c.lists[0][0], c.lists[1][1]}};
        std::sort(c.h_edges.begin(), c.h_edges.end());
        CoverValidation v = validate_cover(c);
        CHECK(has_violation(v, "cross-matching"));
    }
    SUBCASE("list count mismatch") {
        Cover c = oracles::random_cover(path(2), 2, 1);
        c.lists.pop_back();
        CHECK(has_violation(validate_cover(c), "partition"));
    }
}

TEST_CASE("validate_cover with explicit clique storage") {
    // two vertices in one list with the intra edge present, cross edge to a
    // singleton neighbor list
    Cover c;
    c.base = path(2);
    c.lists = {{0, 1}, {2}};
    c.h_edges = {{0, 1}, {0, 2}};
    CHECK(validate_cover(c, CliqueRep::explicit_full).ok());
    CHECK(has_violation(validate_cover(c, CliqueRep::implicit_cliques), "intra-list clique"));

    SUBCASE("missing intra-list edge is reported in explicit mode") {
        Cover d;
        d.base = path(2);
        d.lists = {{0, 1}, {2}};
        d.h_edges = {{0, 2}};
        CoverValidation v = validate_cover(d, CliqueRep::explicit_full);
        CHECK(has_violation(v, "intra-list clique"));
    }
}

TEST_CASE("cover_from_lists on tiny instances") {
    SUBCASE("shared singleton on an edge is unsatisfiable") {
        ListCover lc = cover_from_lists(path(2), {{{5}, {5}}});
        CHECK(lc.cover.h_edges.size() == 1);
        CHECK_FALSE(oracles::brute_transversal(lc.cover).has_value());
    }
    SUBCASE("disjoint singletons are satisfiable") {
        ListCover lc = cover_from_lists(path(2), {{{1}, {2}}});
        CHECK(lc.cover.h_edges.empty());
        CHECK(oracles::brute_transversal(lc.cover).has_value());
    }
    SUBCASE("equal two-element lists mirror proper 2-colorings") {
        ListCover lc = cover_from_lists(cycle(4), {{{1, 2}, {1, 2}, {1, 2}, {1, 2}}});
        CHECK(lc.cover.h_edges.size() == 8);  // two shared colors per base edge
        CHECK(oracles::count_transversals(lc.cover) == 2);
    }
    SUBCASE("id and color lookups invert each other") {
        ListCover lc = cover_from_lists(path(3), {{{4, 9}, {2}, {9, 4, 4}}});
        CHECK(lc.cover.lists[2].size() == 2);  // duplicate color collapses
        for (int u = 0; u < 3; ++u)
            for (int id : lc.cover.lists[u]) {
                CHECK(lc.id_of(u, lc.color_of(id)) == id);
            }
        CHECK(lc.id_of(0, 7) == -1);
        CHECK(lc.color_of(99) == -1);
    }
    SUBCASE("empty list is rejected") {
        CHECK_THROWS_AS(cover_from_lists(path(2), {{{1}, {}}}), std::invalid_argument);
        CHECK_THROWS_AS(cover_from_lists(path(2), {{{1}}}), std::invalid_argument);
    }
}

TEST_CASE("list reduction preserves colorability exactly") {
    for (unsigned seed = 0; seed < 50; ++seed) {
        std::mt19937 rng(3000 + seed);
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_graph(n, 0.5, rng());
        ListAssignment la;
        la.lists.resize(n);
        for (int u = 0; u < n; ++u) {
            int sz = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < sz; ++i) la.lists[u].push_back(static_cast<int>(rng() % 5));
        }
        ListCover lc = cover_from_lists(g, la);
        REQUIRE(validate_cover(lc.cover).ok());

        auto direct = oracles::brute_list_coloring(g, la.lists);
        SolveResult solved = find_transversal(lc.cover);
        REQUIRE(solved.satisfiable == direct.has_value());

        if (direct) {
            // both witnesses cross the bijection and validate on the far side
            Transversal t = list_coloring_to_transversal(lc, *direct);
            CHECK(check_transversal(lc.cover, t));
            std::vector<int> coloring = transversal_to_list_coloring(lc, *solved.witness);
            for (auto [u, v] : g.edges) CHECK(coloring[u] != coloring[v]);
            for (int u = 0; u < n; ++u)
                CHECK(std::count(la.lists[u].begin(), la.lists[u].end(), coloring[u]) > 0);
        }
    }
}

TEST_CASE("transversal and coloring conversions reject bad input") {
    ListCover lc = cover_from_lists(path(2), {{{1, 2}, {1, 2}}});
    CHECK_THROWS_AS(transversal_to_list_coloring(lc, {0}), std::invalid_argument);
    CHECK_THROWS_AS(transversal_to_list_coloring(lc, {0, 99}), std::invalid_argument);
    // both endpoints pick color 1: adjacent in H
    CHECK_THROWS_AS(transversal_to_list_coloring(lc, {lc.id_of(0, 1), lc.id_of(1, 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(list_coloring_to_transversal(lc, {1}), std::invalid_argument);
    CHECK_THROWS_AS(list_coloring_to_transversal(lc, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(list_coloring_to_transversal(lc, {1, 1}), std::invalid_argument);
    CHECK(list_coloring_to_transversal(lc, {1, 2}) ==
          Transversal{lc.id_of(0, 1), lc.id_of(1, 2)});
}

TEST_CASE("remove_and_restrict basics") {
    SUBCASE("empty choice keeps everything") {
        Cover c = oracles::random_cover(cycle(4), 2, 11);
        RestrictedCover r = remove_and_restrict(c, {});
        CHECK(r.cover == c);
        CHECK(r.base_vertices == std::vector<int>{0, 1, 2, 3});
        CHECK(r.emptied.empty());
    }
    SUBCASE("matched singleton empties the neighbor") {
        ListCover lc = cover_from_lists(path(2), {{{5}, {5}}});
        RestrictedCover r = remove_and_restrict(lc.cover, {lc.id_of(0, 5)});
        CHECK(r.cover.base.n == 1);
        CHECK(r.base_vertices == std::vector<int>{1});
        CHECK(r.emptied == std::vector<int>{1});
        CHECK(r.cover.lists[0].empty());
    }
    SUBCASE("each neighbor list loses at most one element") {
        Cover c = oracles::random_cover(cycle(4), 3, 12);
        int chosen = c.lists[0][1];
        RestrictedCover r = remove_and_restrict(c, {chosen});
        CHECK(r.cover.base.n == 3);
        for (std::size_t i = 0; i < r.cover.lists.size(); ++i) {
            int orig = r.base_vertices[i];
            int lost = 3 - static_cast<int>(r.cover.lists[i].size());
            CHECK(lost == (c.base.has_edge(0, orig) ? 1 : 0));
        }
    }
    SUBCASE("preconditions") {
        Cover c = oracles::random_cover(path(3), 2, 13);
        CHECK_THROWS_AS(remove_and_restrict(c, {999}), std::invalid_argument);
        CHECK_THROWS_AS(remove_and_restrict(c, {c.lists[0][0], c.lists[0][1]}),
                        std::invalid_argument);
        CoverIndex idx(c);
        auto nbr = idx.cross_neighbors(c.lists[1][0]);
        REQUIRE_FALSE(nbr.empty());
        CHECK_THROWS_AS(remove_and_restrict(c, {c.lists[1][0], nbr[0].second}),
                        std::invalid_argument);
    }
}

TEST_CASE("restricted transversals extend back to the original cover") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        std::mt19937 rng(4000 + seed);
        Graph g = oracles::random_graph(3 + static_cast<int>(rng() % 4), 0.5, rng());
        if (g.n == 0) continue;
        Cover c = oracles::random_cover(g, 2 + static_cast<int>(rng() % 2), rng(), 0.8);
        int u = static_cast<int>(rng() % g.n);
        int x = c.lists[u][rng() % c.lists[u].size()];
        RestrictedCover r = remove_and_restrict(c, {x});
        SolveResult sub = find_transversal(r.cover);
        if (!sub.satisfiable) continue;
        Transversal full(g.n);
        full[u] = x;
        for (std::size_t i = 0; i < r.base_vertices.size(); ++i)
            full[r.base_vertices[i]] = (*sub.witness)[i];
        CHECK(check_transversal(c, full));
    }
}

TEST_CASE("complete_matchings fills with lowest free pairs") {
    SUBCASE("already perfect: unchanged") {
        Cover c = oracles::random_cover(cycle(4), 2, 21);
        CHECK(complete_matchings(c) == c);
    }
    SUBCASE("bare cover gets identity matchings") {
        Cover c = oracles::random_cover(cycle(4), 2, 22, 0.0);
        CHECK(c.h_edges.empty());
        Cover full = complete_matchings(c);
        CHECK(full == enumerate_covers(cycle(4), 2).at(0));
    }
    SUBCASE("partial matching keeps existing pairs") {
        Cover c;
        c.base = path(2);
        c.lists = {{0, 1, 2}, {3, 4, 5}};
        c.h_edges = {{2, 3}};  // slot 2 of L(0) to slot 0 of L(1)
        Cover full = complete_matchings(c);
        CHECK(full.h_edges == std::vector<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 3}});
    }
    SUBCASE("unequal list sizes are rejected") {
        Cover c;
        c.base = path(2);
        c.lists = {{0, 1}, {2}};
        CHECK_THROWS_AS(complete_matchings(c), std::invalid_argument);
    }
    SUBCASE("completion only removes transversals") {
        for (unsigned seed = 0; seed < 40; ++seed) {
            std::mt19937 rng(5000 + seed);
            Graph g = oracles::random_graph(2 + static_cast<int>(rng() % 4), 0.6, rng());
            Cover c = oracles::random_cover(g, 2 + static_cast<int>(rng() % 2), rng(), 0.6);
            Cover full = complete_matchings(c);
            auto t = oracles::brute_transversal(full);
            if (t) CHECK(check_transversal(c, *t));
            if (!oracles::brute_transversal(c)) CHECK_FALSE(t.has_value());
        }
    }
}

TEST_CASE("permute_within_lists is a satisfiability-preserving isomorphism") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        Graph g = oracles::random_graph(5, 0.5, 6000 + seed);
        Cover c = oracles::random_cover(g, 3, 6100 + seed, 0.9);
        Cover p = permute_within_lists(c, oracles::random_permutations(c, 6200 + seed));
        CHECK(p.lists == c.lists);
        CHECK(p.h_edges.size() == c.h_edges.size());
        CHECK(oracles::count_transversals(p) == oracles::count_transversals(c));
    }
    Cover c = oracles::random_cover(path(2), 2, 1);
    CHECK_THROWS_AS(permute_within_lists(c, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(permute_within_lists(c, {{0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(permute_within_lists(c, {{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("gauge_fix straightens forest matchings to the identity") {
    SUBCASE("trees become the unique normalized cover") {
        for (unsigned seed = 0; seed < 10; ++seed) {
            Graph t = oracles::tree_from_prufer({static_cast<int>(seed % 5),
                                                 static_cast<int>((seed / 2) % 5),
                                                 static_cast<int>((seed / 3) % 5)});
            Cover c = oracles::random_cover(t, 3, 7000 + seed);
            Cover fixed = gauge_fix(c);
            CHECK(fixed == enumerate_covers(t, 3).at(0));
        }
    }
    SUBCASE("satisfiability and transversal counts are preserved") {
        for (unsigned seed = 0; seed < 25; ++seed) {
            Graph g = oracles::random_graph(5, 0.6, 7100 + seed);
            Cover c = oracles::random_cover(g, 2, 7200 + seed);
            Cover fixed = gauge_fix(c);
            CHECK(validate_cover(fixed).ok());
            CHECK(oracles::count_transversals(fixed) == oracles::count_transversals(c));
        }
    }
    SUBCASE("fixed covers lie in the enumerated family") {
        Graph g = cycle(4);
        CoverFamily fam = enumerate_covers(g, 2);
        for (unsigned seed = 0; seed < 20; ++seed) {
            Cover fixed = gauge_fix(oracles::random_cover(g, 2, 7300 + seed));
            bool found = false;
            for (long long i = 0; i < fam.count() && !found; ++i)
                found = fam.at(i) == fixed;
            CHECK(found);
        }
    }
    SUBCASE("idempotent on family members") {
        CoverFamily fam = enumerate_covers(cycle(4), 3);
        for (long long i = 0; i < fam.count(); ++i) CHECK(gauge_fix(fam.at(i)) == fam.at(i));
    }
    SUBCASE("imperfect matchings are rejected") {
        Cover c = oracles::random_cover(path(2), 2, 1);
        c.h_edges.pop_back();
        CHECK_THROWS_AS(gauge_fix(c), std::invalid_argument);
        Cover d;
        d.base = path(2);
        d.lists = {{0, 1}, {2}};
        d.h_edges = {{0, 2}};
        CHECK_THROWS_AS(gauge_fix(d), std::invalid_argument);
    }
}

TEST_CASE("enumerate_covers family sizes and membership") {
    CHECK(enumerate_covers(cycle(4), 2).count() == 2);
    CHECK(enumerate_covers(cycle(4), 3).count() == 6);
    CHECK(enumerate_covers(complete(3), 2).count() == 2);
    CHECK(enumerate_covers(complete(3), 3).count() == 6);
    CHECK(enumerate_covers(complete_bipartite(3, 3), 2).count() == 16);
    CHECK(enumerate_covers(path(5), 4).count() == 1);
    CHECK(enumerate_covers(make_graph(3, {}), 2).count() == 1);
    CHECK_THROWS_AS(enumerate_covers(cycle(4), 0), std::invalid_argument);

    CoverFamily fam = enumerate_covers(cycle(4), 3);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (long long i = 0; i < fam.count(); ++i) {
        Cover c = fam.at(i);
        CHECK(validate_cover(c).ok());
        for (int u = 0; u < 4; ++u) {
            REQUIRE(c.list_size(u) == 3);
            CHECK(c.lists[u].front() == u * 3);
        }
        seen.insert(c.h_edges);
        CHECK(fam.at(i) == c);  // indexing is reproducible
    }
    CHECK(seen.size() == 6);  // all members distinct
    CHECK_THROWS_AS(fam.at(-1), std::invalid_argument);
    CHECK_THROWS_AS(fam.at(6), std::invalid_argument);
}

TEST_CASE("enumerate_covers overflow is a resource error") {
    Graph dense = complete(7);
    CHECK_THROWS_AS(enumerate_covers(dense, 13).count(), resource_limit_error);
    CHECK_THROWS_AS(enumerate_covers(complete(3), 21).count(), resource_limit_error);
}

TEST_CASE("CoverIndex lookups") {
    Cover c = oracles::random_cover(path(3), 2, 31);
    CoverIndex idx(c);
    for (int u = 0; u < 3; ++u)
        for (int s = 0; s < 2; ++s) {
            CHECK(idx.owner_of(c.lists[u][s]) == u);
            CHECK(idx.slot_of(c.lists[u][s]) == s);
        }
    CHECK(idx.owner_of(999) == -1);
    CHECK(idx.cross_neighbors(999).empty());
    for (auto [x, y] : c.h_edges) {
        CHECK(idx.cross_adjacent(x, y));
        CHECK(idx.cross_adjacent(y, x));
    }
    CHECK_FALSE(idx.cross_adjacent(c.lists[0][0], c.lists[0][1]));
    // neighbor rows carry (base vertex, id) and mirror the edge set
    std::size_t total = 0;
    for (int u = 0; u < 3; ++u)
        for (int x : c.lists[u]) {
            for (auto [v, y] : idx.cross_neighbors(x)) {
                CHECK(idx.owner_of(y) == v);
                CHECK(idx.cross_adjacent(x, y));
            }
            total += idx.cross_neighbors(x).size();
        }
    CHECK(total == 2 * c.h_edges.size());
}
