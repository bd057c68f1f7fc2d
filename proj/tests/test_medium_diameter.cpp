#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testing.hpp"

#include <treefit/error.hpp>
#include <treefit/generators.hpp>
#include <treefit/medium_diameter.hpp>

using namespace treefit;

namespace {
    // Two copies of K_m sharing vertex 0.
    auto barbell(int m) -> Graph
    {
        std::vector<Edge> e;
        for (int side = 0; side < 2; ++side) {
            std::vector<int> vs{0};
            for (int i = 1; i < m; ++i)
                vs.push_back(side * (m - 1) + i);
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    e.emplace_back(vs[i], vs[j]);
        }
        return Graph(2 * m - 1, e);
    }

    // K_a on 0..a−1 and K_b on a..a+b−1, plus every edge between `bridges` and
    // the second clique.
    auto bridged_cliques(int a, int b, const std::vector<int> & bridges) -> Graph
    {
        std::vector<Edge> e;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                e.emplace_back(i, j);
        for (int i = a; i < a + b; ++i)
            for (int j = i + 1; j < a + b; ++j)
                e.emplace_back(i, j);
        for (int x : bridges)
            for (int j = a; j < a + b; ++j)
                e.emplace_back(x, j);
        return Graph(a + b, e);
    }

    // K_m twice, with the matching (first+i, m+first+i) for i < size.
    auto matched_cliques(int m, int first, int size) -> Graph
    {
        std::vector<Edge> e;
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    e.emplace_back(side * m + i, side * m + j);
        for (int i = 0; i < size; ++i)
            e.emplace_back(first + i, m + first + i);
        return Graph(2 * m, e);
    }

    auto spider_with_legs(const std::vector<int> & lengths) -> Tree
    {
        std::vector<Edge> e;
        int next = 1;
        for (int len : lengths) {
            int prev = 0;
            for (int i = 0; i < len; ++i) {
                e.emplace_back(prev, next);
                prev = next++;
            }
        }
        return Tree(next, e);
    }

    // Spine 0..m−1 with a pendant three-vertex path at every spine vertex and
    // one extra leaf at the spine end. Δ = 3 and ld = 1.
    auto comb_tree(int m) -> Tree
    {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < m; ++i)
            e.emplace_back(i, i + 1);
        int next = m;
        for (int i = 0; i < m; ++i) {
            e.emplace_back(i, next);
            e.emplace_back(next, next + 1);
            e.emplace_back(next + 1, next + 2);
            next += 3;
        }
        e.emplace_back(m - 1, next);
        return Tree(next + 1, e);
    }

    // Path of spine+1 vertices with two-vertex pendants hung round-robin on
    // inner vertices 2..spine−2 until the order is n; the diameter stays
    // `spine` and ld = 1.
    auto long_tree(int n, int spine) -> Tree
    {
        std::vector<Edge> e;
        for (int i = 0; i < spine; ++i)
            e.emplace_back(i, i + 1);
        int next = spine + 1;
        int at = 2;
        while (next + 1 < n) {
            e.emplace_back(at, next);
            e.emplace_back(next, next + 1);
            next += 2;
            at = at + 1 > spine - 2 ? 2 : at + 1;
        }
        if (next < n)
            e.emplace_back(spine / 2, next++);
        return Tree(next, e);
    }

    auto random_long_tree(int n, int spine, Rng & rng) -> Tree
    {
        std::vector<Edge> e;
        for (int i = 0; i < spine; ++i)
            e.emplace_back(i, i + 1);
        for (int v = spine + 1; v < n; ++v) {
            // hang on an inner spine vertex or on an earlier extra vertex
            int at = (v == spine + 1 || rng.coin(0.5)) ? 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spine - 3)))
                                                     : spine + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(v - spine - 1)));
            e.emplace_back(at, v);
        }
        return Tree(n, e);
    }
}

TEST_CASE("trivial paths on a planted long path")
{
    auto g = cycle_blowup(20, 4);    // δ = 11
    auto t = path_tree(13);
    TrivialPathTrace trace;
    auto e = try_embed_via_trivial_paths(g, t, &trace);
    REQUIRE(e);
    CHECK(verify_certificate(g, t, *e));
    CHECK(trace.insertions > 0);
    CHECK_FALSE(trace.hop_fallback);
    CHECK_FALSE(trace.stall_fallback);

    // k = 3 with a bushy middle
    auto g3 = cycle_blowup(8, 6);
    auto t3 = long_tree(20, 16);
    REQUIRE(t3.order() == g3.min_degree() + 3);
    trace = {};
    auto e3 = try_embed_via_trivial_paths(g3, t3, &trace);
    REQUIRE(e3);
    CHECK(verify_certificate(g3, t3, *e3));
    CHECK(trace.insertions > 0);
}

TEST_CASE("trivial paths relaxed fuzz")
{
    Rng rng(31);
    int runs = 0, wins = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int c = 6 + static_cast<int>(rng.below(4));
        int len = 6 + static_cast<int>(rng.below(10));
        auto g = cycle_blowup(len, c);
        int k = 2 + static_cast<int>(rng.below(2));
        int n = g.min_degree() + k;
        int spine = std::min(n - 1, 6 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 6))));
        auto t = random_long_tree(n, spine, rng);
        if (leaf_degree(t).value >= k || static_cast<int>(t.leaves().size()) < k - 1)
            continue;
        ++runs;
        if (auto e = try_embed_via_trivial_paths(g, t)) {
            CHECK(verify_certificate(g, t, *e));
            ++wins;
        }
    }
    MESSAGE("trivial paths fuzz: ", wins, "/", runs);
    CHECK(runs > 50);
    CHECK(wins * 10 >= runs * 9);
}

TEST_CASE("trivial paths at the literal constants")
{
    // k = 3: diam(T) = 2k⁴ = 162 and δ = 974 ≥ 2k·diam(T) = 972
    auto g = cycle_blowup(4, 325);
    int k = 3;
    auto t = long_tree(g.min_degree() + k, 162);
    REQUIRE(t.order() == 977);
    REQUIRE(tree_diameter(t).length == 162);
    REQUIRE(leaf_degree(t).value < k);
    TrivialPathTrace trace;
    auto e = embed_via_trivial_paths(g, t, k, &trace);
    CHECK(verify_certificate(g, t, e));
    CHECK(trace.insertions > 100);

    CHECK_THROWS_AS(embed_via_trivial_paths(g, long_tree(977, 150), k), Error);    // diameter too small
    CHECK_THROWS_AS(embed_via_trivial_paths(g, t, 2), Error);                      // k < 3
    CHECK_THROWS_AS(embed_via_trivial_paths(cycle_blowup(4, 300), t, k), Error);   // order is not δ+k
}

TEST_CASE("trivial paths fallbacks")
{
    SUBCASE("blocked threading hands over to a preserving path")
    {
        // the image takes both bridges, so the missing non-neighbor on the
        // far clique cannot be reached
        auto g = bridged_cliques(30, 30, {1, 2});
        REQUIRE(g.min_degree() == 29);
        auto t = path_tree(31);
        TrivialPathTrace trace;
        auto e = try_embed_via_trivial_paths(g, t, &trace);
        REQUIRE(e);
        CHECK(verify_certificate(g, t, *e));
        CHECK(trace.hop_fallback);
    }
    SUBCASE("triangle-free graph stalls the re-expansion")
    {
        std::vector<Edge> e;
        for (int i = 0; i < 12; ++i)
            for (int j = 12; j < 24; ++j)
                e.emplace_back(i, j);
        Graph g(24, e);
        auto t = path_tree(14);
        TrivialPathTrace trace;
        auto r = try_embed_via_trivial_paths(g, t, &trace);
        REQUIRE(r);
        CHECK(verify_certificate(g, t, *r));
        CHECK(trace.stall_fallback);
    }
}

TEST_CASE("escape vertex growth")
{
    SUBCASE("matching escape")
    {
        // δ = 11; vertex 0 has degree δ but a matching of size 4 leaves N[0]
        auto g = matched_cliques(12, 8, 4);
        REQUIRE(g.min_degree() == 11);
        REQUIRE(is_q_escape(g, 0, 4));
        REQUIRE(g.degree(0) < g.min_degree() + 4);
        auto t = spider_with_legs({3, 3, 2, 2, 2});
        REQUIRE(t.order() == 13);
        auto e = try_embed_via_escape(g, t, 0);
        REQUIRE(e);
        CHECK(verify_certificate(g, t, *e));
        CHECK(e->image(0) == 0);
    }
    SUBCASE("degree escape")
    {
        auto g = with_extra_edges(matched_cliques(12, 8, 0), {{0, 12}, {0, 13}, {0, 14}, {0, 15}});
        REQUIRE(g.degree(0) == g.min_degree() + 4);
        auto t = spider_with_legs({3, 3, 2, 2, 2});
        auto e = try_embed_via_escape(g, t, 0);
        REQUIRE(e);
        CHECK(verify_certificate(g, t, *e));
    }
    SUBCASE("literal constants")
    {
        // k = 2, diam(T) = 4, q = 2k²·diam(T) = 32 ≤ δ = 40; every vertex
        // escapes through the perfect matching
        auto g = matched_cliques(40, 0, 40);
        std::vector<int> legs(20, 2);
        auto spider = spider_with_legs(legs);
        auto edges = spider.edges();
        edges.emplace_back(0, spider.order());
        Tree t(spider.order() + 1, edges);
        REQUIRE(t.order() == g.min_degree() + 2);
        auto e = embed_via_escape(g, t, 2, 32);
        CHECK(verify_certificate(g, t, e));

        CHECK_THROWS_AS(embed_via_escape(g, t, 2, 31), Error);    // q below 2k²·diam(T)
        std::vector<int> legs22(22, 2);
        auto big = spider_with_legs(legs22);
        auto big_edges = big.edges();
        big_edges.emplace_back(0, big.order());
        Tree t46(big.order() + 1, big_edges);
        auto k45 = complete_graph(45);
        REQUIRE(t46.order() == k45.min_degree() + 2);
        try {
            embed_via_escape(k45, t46, 2, 32);
            FAIL("expected an error");
        }
        catch (const Error & err) {
            CHECK(err.kind() == ErrorKind::PreconditionViolated);
            CHECK(std::string(err.what()).find("escape") != std::string::npos);
        }
    }
}

TEST_CASE("escape or separator")
{
    SUBCASE("growth succeeds on dense random graphs")
    {
        Rng rng(8);
        int wins = 0;
        for (int trial = 0; trial < 30; ++trial) {
            auto t = comb_tree(4 + static_cast<int>(rng.below(4)));
            int delta = t.order() - 2;
            auto g = random_min_degree_graph(2 * delta + static_cast<int>(rng.below(10)), delta, rng);
            auto r = try_embed_or_separator(g, t);
            REQUIRE(r);
            if (auto * e = std::get_if<PartialEmbedding>(&*r)) {
                CHECK(verify_certificate(g, t, *e));
                ++wins;
            }
            else
                CHECK(is_separator(g, std::get<VertexSet>(*r)));
        }
        CHECK(wins > 0);
    }
    SUBCASE("bottleneck gives a separator that feeds the split embedding")
    {
        auto g = barbell(20);    // cut vertex 0 is taken by the first image
        auto t = comb_tree(5);
        REQUIRE(t.order() == g.min_degree() + 2);
        auto r = try_embed_or_separator(g, t);
        REQUIRE(r);
        REQUIRE(std::holds_alternative<VertexSet>(*r));
        auto s = std::get<VertexSet>(*r);
        CHECK(is_separator(g, s));
        CHECK(s.contains(0));
        int k = 2;
        CHECK(s.count() <= 2 * k * (k - 1) * (tree_diameter(t).length + 2));
        auto e = try_embed_with_separator(g, t, s);
        REQUIRE(e);
        CHECK(verify_certificate(g, t, *e));
    }
    SUBCASE("hypotheses")
    {
        auto g = barbell(20);
        CHECK_THROWS_AS(embed_or_separator(g, comb_tree(5), 2), Error);    // δ < k⁵·diam(T)
        CHECK_THROWS_AS(embed_or_separator(g, star_tree(20), 2), Error);   // Δ(T) ≥ k²
    }
}

TEST_CASE("separator split")
{
    SUBCASE("barbell and broom, both sides")
    {
        auto g = barbell(20);
        std::vector<int> legs(11, 0);
        legs.back() = 10;
        auto broom = caterpillar_tree(legs);
        REQUIRE(broom.order() == g.min_degree() + 2);
        VertexSet s(g.order(), {0});
        for (bool flip : {false, true}) {
            auto e = try_embed_with_separator(g, broom, s, flip);
            REQUIRE(e);
            CHECK(verify_certificate(g, broom, *e));
        }
        // a redundant separator is trimmed first
        VertexSet fat(g.order(), {0, 1, 2, 25});
        auto e = try_embed_with_separator(g, broom, fat);
        REQUIRE(e);
        CHECK(verify_certificate(g, broom, *e));
    }
    SUBCASE("literal constants")
    {
        auto g = barbell(32);    // δ = 31 ≥ 15k
        VertexSet s(g.order(), {0});
        auto t = path_tree(33);
        auto e = embed_with_separator(g, t, 2, s);
        CHECK(verify_certificate(g, t, e));
        CHECK_THROWS_AS(embed_with_separator(g, star_tree(32), 2, s), Error);          // not separable
        CHECK_THROWS_AS(embed_with_separator(g, t, 2, VertexSet(g.order(), {5})), Error);    // not a separator
    }
}

TEST_CASE("medium dispatcher")
{
    SUBCASE("literal hypotheses are out of reach")
    {
        auto g = cycle_blowup(20, 4);
        try {
            solve_medium(g, long_tree(14, 9), 3);
            FAIL("expected an error");
        }
        catch (const Error & err) {
            CHECK(err.kind() == ErrorKind::PreconditionViolated);
        }
        auto th = MediumThresholds::literal(3);
        CHECK(th.large_diameter == 2 * 177147);
        CHECK(th.escape_q == 4 * 1594323);
        CHECK(th.separable_q == 2 * 4782969);
    }

    MediumThresholds never{1 << 30, 1 << 30, 1 << 30};
    SUBCASE("trivial paths branch")
    {
        auto th = never;
        th.large_diameter = 8;
        auto g = cycle_blowup(20, 4);
        auto t = path_tree(13);
        auto r = try_solve_medium(g, t, th);
        REQUIRE(r);
        CHECK(r->branch == "medium:trivial_paths");
        CHECK(verify_certificate(g, t, r->embedding));
    }
    SUBCASE("small maximum degree branches")
    {
        Rng rng(3);
        auto t = comb_tree(5);
        auto g = random_min_degree_graph(50, 19, rng);
        auto r = try_solve_medium(g, t, never);
        REQUIRE(r);
        CHECK(r->branch == "medium:escape_or_separator");
        CHECK(verify_certificate(g, t, r->embedding));

        auto bar = barbell(20);
        auto h = try_solve_medium(bar, t, never);
        REQUIRE(h);
        CHECK(h->branch == "medium:separator_handoff");
        CHECK(verify_certificate(bar, t, h->embedding));
    }
    SUBCASE("escape branch")
    {
        auto th = never;
        th.escape_q = 4;
        auto g = matched_cliques(12, 8, 4);
        auto t = spider_with_legs({3, 3, 2, 2, 2});
        auto r = try_solve_medium(g, t, th);
        REQUIRE(r);
        CHECK(r->branch == "medium:escape");
        CHECK(verify_certificate(g, t, r->embedding));
    }
    SUBCASE("separable branch")
    {
        auto th = never;
        th.escape_q = 25;
        th.separable_q = 3;
        auto g = barbell(20);
        auto t = spider_with_legs({4, 4, 4, 4, 4});
        REQUIRE(t.order() == g.min_degree() + 2);
        auto r = try_solve_medium(g, t, th);
        REQUIRE(r);
        CHECK(r->branch == "medium:nonescape_separator");
        CHECK(verify_certificate(g, t, r->embedding));
    }
}
