#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testing.hpp"

#include <treefit/dense_regime.hpp>
#include <treefit/error.hpp>
#include <treefit/generators.hpp>

using namespace treefit;

namespace {
    auto brute_min_hitting_set(const Tree & t) -> int
    {
        int n = t.order();
        std::vector<unsigned> nbhd(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int y : t.neighbors(v))
                nbhd[v] |= 1u << y;
        int best = n;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int size = __builtin_popcount(mask);
            if (size >= best)
                continue;
            if (std::all_of(nbhd.begin(), nbhd.end(), [&](unsigned s) { return (s & mask) != 0; }))
                best = size;
        }
        return best;
    }

    auto leaf_capped_tree(int n, int cap, Rng & rng) -> Tree
    {
        while (true) {
            auto t = random_tree_leaf_capped(n, cap, rng);
            if (leaf_degree(t).value <= cap)
                return t;
        }
    }
}

TEST_CASE("hitting set bound")
{
    CHECK(hitting_set_lower_bound(path_tree(6)) == 3);
    CHECK(hitting_set_lower_bound(star_tree(5)) == 0);
    CHECK(hitting_set_lower_bound(path_tree(2)) == 1);
    for (int n = 2; n <= 9; ++n)
        for (auto & t : testing::all_free_trees(n)) {
            int bound = hitting_set_lower_bound(t);
            int exact = brute_min_hitting_set(t);
            CHECK(exact >= bound);
        }
}

TEST_CASE("removal order keeps the leaf-degree")
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + static_cast<int>(rng.below(30));
        auto t = random_tree(n, rng);
        int ld = leaf_degree(t).value;
        auto order = dense_removal_order(t, 5);
        CHECK(static_cast<int>(order.size()) == n - 5);
        auto inside = all_vertices(t);
        for (int u : order) {
            CHECK(degree_within(t, inside, u) == 1);
            inside.erase(u);
            auto sub = induced_subtree(t, inside);
            CHECK(leaf_degree(sub.tree).value <= ld);
        }
    }
}

TEST_CASE("dense embedding at the literal constants")
{
    Rng rng(8);
    auto g = random_min_degree_graph(52, 48, rng);
    REQUIRE(g.min_degree() == 48);
    auto p50 = path_tree(50);
    CHECK(verify_certificate(g, p50, embed_dense(g, p50, 2)));
    std::vector<int> legs(28, 0);
    for (int i = 2; i <= 23; ++i)
        legs[i] = 1;
    auto cat50 = caterpillar_tree(legs);
    REQUIRE(cat50.order() == 50);
    REQUIRE(leaf_degree(cat50).value == 1);
    CHECK(verify_certificate(g, cat50, embed_dense(g, cat50, 2)));

    auto big = random_min_degree_graph(60, 48, rng);
    CHECK_THROWS_AS(embed_dense(big, p50, 2), Error);
    CHECK_THROWS_AS(embed_dense(g, star_tree(49), 2), Error);
    CHECK_THROWS_AS(embed_dense(g, path_tree(51), 2), Error);
    CHECK_THROWS_AS(embed_dense(complete_graph(10), path_tree(10), 2), Error);

    DenseTrace total;
    for (int trial = 0; trial < 30; ++trial) {
        auto h = random_min_degree_graph(50 + static_cast<int>(rng.below(5)), 48, rng);
        if (h.min_degree() != 48)
            continue;
        auto t = leaf_capped_tree(50, 1, rng);
        DenseTrace trace;
        auto e = embed_dense(h, t, 2, &trace);
        CHECK(verify_certificate(h, t, e));
        CHECK(trace.free_steps + trace.leaf_swaps + trace.relocations == 1);
        total.free_steps += trace.free_steps;
        total.leaf_swaps += trace.leaf_swaps;
        total.relocations += trace.relocations;
    }
    MESSAGE("literal constants: ", total.free_steps, " free, ", total.leaf_swaps, " swaps, ", total.relocations, " relocations");
}

TEST_CASE("relaxed dense induction")
{
    Rng rng(13);
    DenseTrace total;
    int embedded = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 10 + static_cast<int>(rng.below(15));
        int delta = n - 1 - static_cast<int>(rng.below(3));
        auto g = random_min_degree_graph(n, delta, rng);
        int k = 2 + static_cast<int>(rng.below(2));
        int m = std::min(n, g.min_degree() + k);
        auto t = leaf_capped_tree(m, k - 1, rng);
        auto e = try_embed_dense(g, t, &total);
        if (e) {
            CHECK(verify_certificate(g, t, *e));
            ++embedded;
        }
    }
    CHECK(embedded > 200);
    CHECK(total.leaf_swaps > 0);
    CHECK(total.relocations > 0);
}
