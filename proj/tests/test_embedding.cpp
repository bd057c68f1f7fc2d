#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testing.hpp"

#include <treefit/embedding.hpp>
#include <treefit/error.hpp>
#include <treefit/generators.hpp>
#include <treefit/oracle.hpp>

#include <algorithm>

using namespace treefit;

namespace {
    auto from_map(int tree_order, int graph_order, const std::vector<std::pair<int, int>> & pairs) -> PartialEmbedding
    {
        PartialEmbedding e(tree_order, graph_order);
        for (auto [t, g] : pairs)
            e.assign(t, g);
        return e;
    }
}

TEST_CASE("partial embedding bookkeeping")
{
    PartialEmbedding e(3, 5);
    e.assign(0, 4);
    CHECK(e.size() == 1);
    CHECK(e.preimage(4) == 0);
    CHECK_THROWS_AS(e.assign(0, 1), Error);
    CHECK_THROWS_AS(e.assign(1, 4), Error);
    e.unassign(0);
    CHECK(e.empty());
    CHECK_FALSE(e.is_used(4));
}

TEST_CASE("verify")
{
    auto g = cycle_graph(5);
    auto t = path_tree(3);
    CHECK(verify(from_map(3, 5, {{0, 0}, {1, 1}, {2, 2}}), g, t));
    CHECK(verify_certificate(g, t, from_map(3, 5, {{0, 4}, {1, 0}, {2, 1}})));
    CHECK_FALSE(verify(from_map(3, 5, {{0, 0}, {1, 2}}), g, t));
    // domain {0, 2} is disconnected in the path
    CHECK_FALSE(verify(from_map(3, 5, {{0, 0}, {2, 1}}), g, t));
    CHECK(verify(PartialEmbedding(3, 5), g, t));
    CHECK_FALSE(verify_certificate(g, t, from_map(3, 5, {{0, 0}, {1, 1}})));
    CHECK_FALSE(verify(PartialEmbedding(3, 6), g, t));
}

TEST_CASE("chvatal extension")
{
    auto g = complete_graph(5);
    auto t = star_tree(4);
    auto e = chvatal_extend(g, t, PartialEmbedding(5, 5));
    CHECK(verify_certificate(g, t, e));
    CHECK(e.image(0) == 0);

    auto c = cycle_graph(7);
    CHECK_THROWS_AS(chvatal_extend(c, path_tree(4), PartialEmbedding(4, 7)), Error);
    auto p = chvatal_extend(c, path_tree(3), from_map(3, 7, {{1, 5}}));
    CHECK(verify_certificate(c, path_tree(3), p));
    CHECK(p.image(1) == 5);

    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng.below(20));
        int delta = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        auto graph = random_min_degree_graph(n, delta, rng);
        auto tree = random_tree(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(delta + 1))), rng);
        // seed with a random partial covering a connected prefix of a BFS order
        RootedView view(tree, 0);
        int prefix = static_cast<int>(rng.below(static_cast<std::uint64_t>(tree.order())));
        PartialEmbedding seed(tree.order(), n);
        if (prefix > 0) {
            seed.assign(0, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            greedy_extend(graph, tree, seed, [&] {
                VertexSet s(tree.order());
                for (int i = 0; i < prefix; ++i)
                    s.insert(view.order[i]);
                return s;
            }());
        }
        auto out = chvatal_extend(graph, tree, seed);
        CHECK(verify_certificate(graph, tree, out));
        for (int x : seed.domain_list())
            CHECK(out.image(x) == seed.image(x));
    }
}

TEST_CASE("delta plus two examples")
{
    auto c6 = cycle_graph(6);
    CHECK(is_contains(solve_delta_plus_two(c6, path_tree(4))));
    auto star = solve_delta_plus_two(c6, star_tree(3));
    REQUIRE(is_not_contained(star));
    CHECK(std::get<NotContained>(star).reason == "regular graph and star tree");

    auto pet = petersen_graph();
    CHECK(is_not_contained(solve_delta_plus_two(pet, star_tree(4))));
    auto spider = solve_delta_plus_two(pet, spider_tree(2, 2));
    REQUIRE(is_contains(spider));
    CHECK(verify_certificate(pet, spider_tree(2, 2), std::get<Contains>(spider).embedding));

    // one vertex of degree δ+1 makes the star fit
    auto g = with_extra_edges(c6, {{0, 3}});
    auto s = solve_delta_plus_two(g, star_tree(3));
    REQUIRE(is_contains(s));
    CHECK(verify_certificate(g, star_tree(3), std::get<Contains>(s).embedding));

    CHECK_THROWS_AS(solve_delta_plus_two(c6, path_tree(5)), Error);
    CHECK_THROWS_AS(solve_delta_plus_two(disjoint_union(cycle_graph(3), cycle_graph(3)), path_tree(3)), Error);
}

TEST_CASE("delta plus two agrees with the oracle on all connected graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (auto & g : testing::all_connected_graphs(n)) {
            int cap = std::min(n, g.min_degree() + 2);
            for (int m = 1; m <= cap; ++m)
                for (auto & t : testing::all_free_trees(m)) {
                    auto fast = solve_delta_plus_two(g, t);
                    auto slow = brute_force_contains(g, t);
                    CHECK(outcome_name(fast) == outcome_name(slow));
                    if (is_contains(fast))
                        CHECK(verify_certificate(g, t, std::get<Contains>(fast).embedding));
                }
        }
}

TEST_CASE("delta plus two on random larger graphs")
{
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 9 + static_cast<int>(rng.below(4));
        auto g = random_connected_gnp(n, 0.3 + 0.5 * rng.unit(), rng);
        int m = std::min(n, g.min_degree() + 2);
        auto t = random_tree(m, rng);
        auto fast = solve_delta_plus_two(g, t);
        CHECK(outcome_name(fast) == outcome_name(brute_force_contains(g, t)));
        if (is_contains(fast))
            CHECK(verify_certificate(g, t, std::get<Contains>(fast).embedding));
        else
            CHECK((testing::is_regular(g) && is_star(t)));
    }
}

TEST_CASE("leaf completion")
{
    auto c6 = cycle_graph(6);
    auto p4 = path_tree(4);
    auto partial = from_map(4, 6, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(saved_non_neighbors(c6, partial, 2) == 1);
    auto e = complete_leaves(c6, p4, {3}, partial);
    CHECK(verify_certificate(c6, p4, e));
    CHECK(e.image(3) == 3);

    try {
        complete_leaves(c6, p4, {3}, from_map(4, 6, {{2, 0}}));
        FAIL("expected HypothesisNotMet");
    } catch (const Error & err) {
        CHECK(err.kind() == ErrorKind::HypothesisNotMet);
    }
    CHECK_THROWS_AS(complete_leaves(c6, p4, {}, partial), Error);
    CHECK_THROWS_AS(complete_leaves(c6, p4, {1}, partial), Error);
}
