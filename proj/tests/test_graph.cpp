#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testing.hpp"

#include <treefit/error.hpp>
#include <treefit/generators.hpp>

using namespace treefit;

namespace {
    auto k4_minus_edge() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

    auto two_cliques_sharing(int size) -> Graph
    {
        // vertices 0..size-1 and size-1..2size-2; vertex size-1 is shared
        std::vector<Edge> e;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                e.emplace_back(i, j);
                e.emplace_back(i + size - 1, j + size - 1);
            }
        return Graph(2 * size - 1, e);
    }

    auto brute_min_cover(const Graph & g, const VertexSet & left, const VertexSet & right) -> int
    {
        std::vector<Edge> cut;
        for (auto [u, v] : g.edges())
            if ((left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u)))
                cut.emplace_back(u, v);
        int n = g.order(), best = n;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool ok = true;
            for (auto [u, v] : cut)
                if (! (mask >> u & 1) && ! (mask >> v & 1)) {
                    ok = false;
                    break;
                }
            if (ok)
                best = std::min(best, __builtin_popcount(mask));
        }
        return best;
    }
}

TEST_CASE("graph construction rejects loops and parallel edges")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    auto g = k4_minus_edge();
    CHECK(g.edge_count() == 5);
    long long sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        sum += g.degree(v);
        for (int w : g.neighbors(v))
            CHECK(g.adjacent(w, v));
    }
    CHECK(sum == 2 * g.edge_count());
}

TEST_CASE("min degree")
{
    CHECK(min_degree(cycle_graph(6)) == 2);
    CHECK(min_degree(petersen_graph()) == 3);
    CHECK(min_degree(k4_minus_edge()) == 2);
    CHECK_THROWS_AS(min_degree(Graph(0, {})), Error);
}

TEST_CASE("neighbor deficiency")
{
    auto k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v)
        CHECK(neighbor_deficiency(k4, v, 2) == 1);
    auto p = petersen_graph();
    for (int v = 0; v < 10; ++v)
        CHECK(neighbor_deficiency(p, v, 1) == 0);
    auto chord = with_extra_edges(cycle_graph(6), {{0, 3}});
    CHECK(neighbor_deficiency(chord, 0, 2) == 0);
    CHECK(neighbor_deficiency(chord, 1, 2) == 1);
}

TEST_CASE("bipartite matching")
{
    auto k4 = complete_graph(4);
    CHECK(max_bipartite_matching(k4, VertexSet(4, {0}), VertexSet(4, {1, 2, 3})).size() == 1);
    auto c6 = cycle_graph(6);
    auto m = max_bipartite_matching(c6, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5}));
    CHECK(m.size() == 2);
    for (auto [u, v] : m)
        CHECK(c6.adjacent(u, v));
    auto two = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(max_bipartite_matching(two, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})).empty());
    CHECK_THROWS_AS(max_bipartite_matching(k4, VertexSet(4, {0, 1}), VertexSet(4, {1, 2})), Error);
}

TEST_CASE("matching size equals minimum cover on random cut graphs (König)")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(11));
        auto g = random_gnp(n, rng.unit(), rng);
        VertexSet left(n), right(n);
        for (int v = 0; v < n; ++v)
            (rng.coin(0.5) ? left : right).insert(v);
        auto m = max_bipartite_matching(g, left, right);
        auto cover = min_cut_vertex_cover(g, left, right);
        int brute = brute_min_cover(g, left, right);
        CHECK(static_cast<int>(m.size()) == brute);
        CHECK(cover.count() == brute);
        for (auto [u, v] : g.edges())
            if ((left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u)))
                CHECK((cover.contains(u) || cover.contains(v)));
    }
}

TEST_CASE("escape vertices")
{
    auto k5 = complete_graph(5);
    CHECK_FALSE(is_q_escape(k5, 0, 1));
    auto p = petersen_graph();
    for (int v = 0; v < 10; ++v)
        CHECK(is_q_escape(p, v, 3));
    CHECK_FALSE(is_q_escape(p, 0, 4));
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_gnp(9, 0.4, rng);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(is_q_escape(g, v, 0));
            for (int q = 1; q < 6; ++q)
                if (is_q_escape(g, v, q))
                    CHECK(is_q_escape(g, v, q - 1));
        }
    }
}

TEST_CASE("separator at a non-escape vertex")
{
    auto g = two_cliques_sharing(5);
    auto s = nonescape_separator(g, 0, 2);
    CHECK(s == VertexSet(g.order(), {4}));
    CHECK(is_separator(g, s));

    CHECK_THROWS_AS(nonescape_separator(complete_graph(5), 0, 1), Error);
    try {
        nonescape_separator(complete_graph(5), 0, 1);
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::TooSmall);
    }

    // barbell: K_6 on 0..5, K_6 on 6..11, bridge 5-6
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(i + 6, j + 6);
        }
    e.emplace_back(5, 6);
    Graph barbell(12, e);
    auto sb = nonescape_separator(barbell, 0, 2);
    CHECK(sb.count() == 1);
    CHECK((sb.contains(5) || sb.contains(6)));
    CHECK(is_separator(barbell, sb));

    try {
        nonescape_separator(petersen_graph(), 0, 3);
        CHECK(false);
    }
    catch (const Error & err) {
        CHECK(err.kind() == ErrorKind::IsEscapeVertex);
    }
}

TEST_CASE("separator property on random non-escape vertices")
{
    Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_connected_gnp(10, 0.3, rng);
        for (int v = 0; v < g.order(); ++v)
            for (int q = 1; q <= 3; ++q) {
                if (is_q_escape(g, v, q))
                    continue;
                if (g.closed_neighborhood(v).count() == g.order())
                    continue;
                try {
                    auto s = nonescape_separator(g, v, q);
                    CHECK(s.count() < q);
                    CHECK_FALSE(s.contains(v));
                    auto comps = connected_components(g, s.complement());
                    auto inside = g.closed_neighborhood(v) - s;
                    for (auto & c : comps) {
                        bool in = false, out = false;
                        for (int x : c)
                            (inside.contains(x) ? in : out) = true;
                        CHECK_FALSE((in && out));
                    }
                    ++checked;
                }
                catch (const Error & e) {
                    CHECK(e.kind() == ErrorKind::TooSmall);
                }
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("bfs distances")
{
    auto p4 = path_graph(4);
    CHECK(bfs_distances(p4, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(bfs_distances(cycle_graph(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
    Graph two(4, {{0, 1}, {2, 3}});
    auto d = bfs_distances(two, 0);
    CHECK(d[2] == 4);
    CHECK(d[3] == 4);
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_gnp(12, 0.25, rng);
        auto dist = bfs_distances(g, 0);
        for (auto [u, v] : g.edges())
            if (dist[u] < g.order() || dist[v] < g.order())
                CHECK(std::abs(dist[u] - dist[v]) <= 1);
    }
}

TEST_CASE("shortest path avoiding a set")
{
    auto c6 = cycle_graph(6);
    auto p = shortest_path_avoiding(c6, 0, 3, VertexSet(6, {1, 2}));
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 5, 4, 3});
    CHECK_FALSE(shortest_path_avoiding(c6, 0, 3, VertexSet(6, {1, 4})).has_value());
    auto q = shortest_path_avoiding(complete_graph(4), 0, 3, VertexSet(4));
    REQUIRE(q.has_value());
    CHECK(q->size() == 2);
}

TEST_CASE("diameter")
{
    CHECK(diameter(cycle_graph(6)).length == 3);
    CHECK(diameter(complete_graph(5)).length == 1);
    auto d = diameter(path_graph(5));
    CHECK(d.length == 4);
    CHECK(d.u == 0);
    CHECK(d.v == 4);
    CHECK(diameter(cycle_graph(6)).u == 0);
    CHECK(diameter(cycle_graph(6)).v == 3);
    CHECK_THROWS_AS(diameter(Graph(3, {{0, 1}})), Error);
}

TEST_CASE("graph enumeration counts")
{
    std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto gs = testing::all_graphs(n);
        CHECK(gs.size() == all[n - 1]);
        std::size_t c = 0;
        for (auto & g : gs)
            c += is_connected(g);
        CHECK(c == connected[n - 1]);
    }
}

TEST_CASE("minimum degree generator hits the declared degree")
{
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 20 + static_cast<int>(rng.below(40));
        int delta = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto g = random_min_degree_graph(n, delta, rng);
        CHECK(g.min_degree() == delta);
    }
}
