#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testing.hpp"

#include <treefit/error.hpp>
#include <treefit/generators.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace treefit;

namespace {
    // two degree-3 vertices joined by a path of `bridge` edges, each with two pendant leaves
    auto h_shape(int bridge) -> Tree
    {
        std::vector<Edge> e;
        for (int i = 0; i < bridge; ++i)
            e.emplace_back(i, i + 1);
        int n = bridge + 1;
        e.emplace_back(0, n);
        e.emplace_back(0, n + 1);
        e.emplace_back(bridge, n + 2);
        e.emplace_back(bridge, n + 3);
        return Tree(n + 4, e);
    }

    auto relabel(const Tree & t, const std::vector<int> & perm) -> Tree
    {
        std::vector<Edge> e;
        for (auto [u, v] : t.edges())
            e.emplace_back(perm[u], perm[v]);
        return Tree(t.order(), e);
    }

    struct Rooted {
        Tree t;
        int root;
    };

    auto all_rooted(int max_n) -> std::vector<Rooted>
    {
        std::vector<Rooted> out;
        for (int n = 1; n <= max_n; ++n)
            for (auto & t : testing::all_free_trees(n))
                for (int r = 0; r < n; ++r)
                    out.push_back({t, r});
        return out;
    }

    auto brute_rooted_subtree(const Tree & a, int ra, const Tree & b, int rb) -> bool
    {
        if (a.order() > b.order())
            return false;
        RootedView view(a, ra);
        std::vector<int> img(static_cast<std::size_t>(a.order()), -1);
        std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            if (i == view.order.size())
                return true;
            int x = view.order[i];
            auto candidates = std::vector<int>{};
            if (i == 0)
                candidates = {rb};
            else
                for (int w : b.neighbors(img[view.parent[x]]))
                    candidates.push_back(w);
            for (int y : candidates) {
                if (used[y])
                    continue;
                used[y] = 1;
                img[x] = y;
                if (rec(i + 1))
                    return true;
                used[y] = 0;
            }
            img[x] = -1;
            return false;
        };
        return rec(0);
    }
}

TEST_CASE("tree construction validates input")
{
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), Error);
    CHECK_NOTHROW(Tree(1, {}));
}

TEST_CASE("free tree enumeration counts")
{
    std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n)
        CHECK(testing::all_free_trees(n).size() == expected[n - 1]);
}

TEST_CASE("leaf degree")
{
    auto star = star_tree(5);
    CHECK(leaf_degree(star).value == 5);
    CHECK(leaf_degree(star).witness == 0);
    auto p6 = path_tree(6);
    auto ld = leaf_degree(p6);
    CHECK(ld.value == 1);
    CHECK((ld.witness == 1 || ld.witness == 4));
    auto spider = spider_tree(3, 2);
    CHECK(leaf_degree(spider).value == 1);
    CHECK(spider.degree(leaf_degree(spider).witness) == 2);
    CHECK_THROWS_AS(leaf_degree(Tree(1, {})), Error);
}

TEST_CASE("leaf count bound")
{
    CHECK(leaf_count_lower_bound_holds(star_tree(6), 3));
    CHECK(leaf_count_lower_bound_holds(path_tree(8), 1));
    Rng rng(4);
    auto t = random_tree(20, rng);
    int diam = tree_diameter(t).length;
    CHECK(leaf_count_lower_bound_holds(t, 20 / diam));
    CHECK_THROWS_AS(leaf_count_lower_bound_holds(path_tree(8), 2), Error);
}

TEST_CASE("leaves versus diameter on all trees up to 10 vertices")
{
    for (int n = 2; n <= 10; ++n)
        for (auto & t : testing::all_free_trees(n)) {
            int diam = tree_diameter(t).length;
            for (int q = 1; q * diam <= n; ++q)
                CHECK(leaf_count_lower_bound_holds(t, q));
        }
}

TEST_CASE("separable edges")
{
    auto e = find_separable_edge(path_tree(10), 5);
    REQUIRE(e.has_value());
    CHECK(*e == Edge{4, 5});
    CHECK_FALSE(find_separable_edge(star_tree(5), 2).has_value());
    for (int n = 2; n <= 10; ++n)
        for (auto & t : testing::all_free_trees(n)) {
            CHECK(find_separable_edge(t, tree_diameter(t).length / 2).has_value());
            for (int q = 1; q <= n; ++q) {
                bool exists = false;
                for (auto [u, v] : t.edges()) {
                    int a = side_of_edge(t, u, v).count();
                    exists = exists || std::min(a, n - a) >= q;
                }
                auto found = find_separable_edge(t, q);
                CHECK(found.has_value() == exists);
                if (found) {
                    int a = side_of_edge(t, found->first, found->second).count();
                    CHECK(std::min(a, n - a) >= q);
                }
            }
        }
}

TEST_CASE("balanced edge meets the degree bound on all trees up to 12 vertices")
{
    CHECK(find_balanced_edge(path_tree(4)) == Edge{1, 2});
    for (int n = 2; n <= 12; ++n)
        for (auto & t : testing::all_free_trees(n)) {
            auto [u, v] = find_balanced_edge(t);
            REQUIRE(t.adjacent(u, v));
            int a = side_of_edge(t, u, v).count();
            int bound = (n - 1 + t.max_degree() - 1) / t.max_degree();
            CHECK(std::min(a, n - a) >= bound);
        }
}

TEST_CASE("maximal trivial paths")
{
    auto p7 = maximal_trivial_paths(path_tree(7));
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].size() == 7);
    auto star = maximal_trivial_paths(star_tree(3));
    CHECK(star.size() == 3);
    auto h = h_shape(4);
    auto hp = maximal_trivial_paths(h);
    CHECK(hp.size() == 5);
    std::size_t edges = 0;
    for (auto & p : hp)
        edges += p.size() - 1;
    CHECK(edges == static_cast<std::size_t>(h.order() - 1));

    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto t = random_tree(2 + static_cast<int>(rng.below(20)), rng);
        std::set<Edge> covered;
        for (auto & p : maximal_trivial_paths(t)) {
            CHECK(t.degree(p.front()) != 2);
            CHECK(t.degree(p.back()) != 2);
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (i > 0)
                    CHECK(t.degree(p[i]) == 2);
                Edge e{std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])};
                CHECK(covered.insert(e).second);
            }
        }
        CHECK(covered.size() == static_cast<std::size_t>(t.order() - 1));
    }
}

TEST_CASE("minimal spanning subtree")
{
    CHECK(minimal_spanning_subtree(path_tree(6), VertexSet(6, {0, 5})).count() == 6);
    auto s = minimal_spanning_subtree(star_tree(4), VertexSet(5, {1, 2}));
    CHECK(s == VertexSet(5, {0, 1, 2}));

    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto t = random_tree(n, rng);
        VertexSet w(n);
        for (int v = 0; v < n; ++v)
            if (rng.coin(0.3))
                w.insert(v);
        if (w.empty())
            w.insert(0);
        auto sub = minimal_spanning_subtree(t, w);
        CHECK(w.is_subset_of(sub));
        CHECK(is_connected_within(t, sub));
        sub.for_each([&](int v) {
            if (degree_within(t, sub, v) <= 1 && sub.count() > 1)
                CHECK(w.contains(v));
        });
        CHECK(sub.count() <= w.count() * std::max(1, tree_diameter(t).length));
        // minimality: no smaller connected superset of w exists
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) >= sub.count())
                continue;
            VertexSet cand(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1)
                    cand.insert(v);
            if (w.is_subset_of(cand))
                CHECK_FALSE(is_connected_within(t, cand));
        }
    }
}

TEST_CASE("trivial path contraction")
{
    auto c = contract_trivial_paths(path_tree(20), 4);
    CHECK(c.tree.order() == 5);
    REQUIRE(c.paths.size() == 1);
    CHECK(c.paths[0].owed == 15);
    CHECK(c.owed_total() == 15);

    auto star = contract_trivial_paths(star_tree(3), 4);
    CHECK(star.tree.order() == 4);
    CHECK(star.owed_total() == 0);

    auto h = contract_trivial_paths(h_shape(10), 4);
    CHECK(h.tree.order() - 1 == 4 + 4);

    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = random_tree(2 + static_cast<int>(rng.below(30)), rng);
        int cap = 1 + static_cast<int>(rng.below(4));
        auto ct = contract_trivial_paths(t, cap);
        CHECK(ct.tree.order() + ct.owed_total() == t.order());
        for (auto & p : ct.paths)
            CHECK(static_cast<int>(p.kept.size()) - 1 <= cap);
    }
}

TEST_CASE("canonical codes")
{
    CHECK(canonical_code(path_tree(3), 0) != canonical_code(path_tree(3), 1));

    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        auto t = random_tree(12, rng);
        std::vector<int> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        CHECK(canonical_code(t, 3) == canonical_code(relabel(t, perm), perm[3]));
    }

    auto rooted = all_rooted(7);
    for (std::size_t i = 0; i < rooted.size(); ++i)
        for (std::size_t j = i; j < rooted.size(); ++j) {
            if (rooted[i].t.order() != rooted[j].t.order())
                continue;
            bool same = canonical_code(rooted[i].t, rooted[i].root) == canonical_code(rooted[j].t, rooted[j].root);
            CHECK(same == testing::brute_rooted_isomorphic(rooted[i].t, rooted[i].root, rooted[j].t, rooted[j].root));
        }
}

TEST_CASE("rooted subtree check agrees with brute force up to 7 vertices")
{
    auto rooted = all_rooted(7);
    // deduplicate by code to keep the sweep small
    std::map<CanonicalCode, Rooted> classes;
    for (auto & r : rooted)
        classes.emplace(canonical_code(r.t, r.root), r);
    for (auto & [ca, a] : classes)
        for (auto & [cb, b] : classes)
            CHECK(is_rooted_subtree(a.t, a.root, b.t, b.root) == brute_rooted_subtree(a.t, a.root, b.t, b.root));
}
