#include <treefit/error.hpp>
#include <treefit/generators.hpp>

#include <algorithm>
#include <string>

namespace treefit {

auto cycle_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, e);
}

auto cycle_blowup(int length, int clique, bool closed) -> Graph
{
    if (length < 1 || clique < 1 || (closed && length < 3))
        fail(ErrorKind::InvalidArgument, "blow-up needs a positive clique size and length (≥ 3 when closed)");
    std::vector<Edge> e;
    for (int i = 0; i < length; ++i)
        for (int a = 0; a < clique; ++a) {
            for (int b = a + 1; b < clique; ++b)
                e.emplace_back(i * clique + a, i * clique + b);
            if (i + 1 < length || closed)
                for (int b = 0; b < clique; ++b)
                    e.emplace_back(i * clique + a, (i + 1) % length * clique + b);
        }
    return Graph(length * clique, e);
}

auto path_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

auto complete_graph(int n) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

auto petersen_graph() -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto e = a.edges();
    for (auto [u, v] : b.edges())
        e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

auto with_extra_edges(const Graph & g, const std::vector<Edge> & extra) -> Graph
{
    auto e = g.edges();
    e.insert(e.end(), extra.begin(), extra.end());
    return Graph(g.order(), e);
}

auto path_tree(int n) -> Tree
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Tree(n, e);
}

auto star_tree(int leaves) -> Tree
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Tree(leaves + 1, e);
}

auto spider_tree(int legs, int length) -> Tree
{
    std::vector<Edge> e;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int i = 0; i < length; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(next, e);
}

auto caterpillar_tree(const std::vector<int> & legs) -> Tree
{
    std::vector<Edge> e;
    int spine = static_cast<int>(legs.size());
    for (int i = 0; i + 1 < spine; ++i)
        e.emplace_back(i, i + 1);
    int next = spine;
    for (int i = 0; i < spine; ++i)
        for (int j = 0; j < legs[i]; ++j)
            e.emplace_back(i, next++);
    return Tree(next, e);
}

auto random_tree(int n, Rng & rng) -> Tree
{
    if (n <= 2)
        return path_tree(n);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto & c : code)
        c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int c : code)
        ++deg[c];
    std::vector<Edge> e;
    for (int c : code) {
        int leaf = 0;
        while (deg[leaf] != 1)
            ++leaf;
        e.emplace_back(leaf, c);
        --deg[leaf];
        --deg[c];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            (a == -1 ? a : b) = v;
    e.emplace_back(a, b);
    return Tree(n, e);
}

auto random_tree_leaf_capped(int n, int cap, Rng & rng) -> Tree
{
    if (cap < 1)
        fail(ErrorKind::InvalidArgument, "leaf degree cap must be at least 1");
    if (n <= 3)
        return path_tree(n);
    // grow from a path on three vertices
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<Edge> e{{0, 1}, {1, 2}};
    adj[0] = {1};
    adj[1] = {0, 2};
    adj[2] = {1};
    auto leaf_count = [&](int v) {
        int c = 0;
        for (int w : adj[v])
            c += adj[w].size() == 1;
        return c;
    };
    for (int x = 3; x < n; ++x) {
        std::vector<int> eligible;
        for (int p = 0; p < x; ++p)
            if (leaf_count(p) < cap)
                eligible.push_back(p);
        int p = eligible[rng.below(eligible.size())];
        adj[p].push_back(x);
        adj[x].push_back(p);
        e.emplace_back(p, x);
    }
    return Tree(n, e);
}

auto random_gnp(int n, double p, Rng & rng) -> Graph
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(p))
                e.emplace_back(i, j);
    return Graph(n, e);
}

auto random_connected_gnp(int n, double p, Rng & rng) -> Graph
{
    auto g = random_gnp(n, p, rng);
    if (n <= 1)
        return g;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    rng.shuffle(perm);
    auto t = random_tree(n, rng);
    std::vector<Edge> extra;
    for (auto [u, v] : t.edges()) {
        int a = perm[u], b = perm[v];
        if (! g.adjacent(a, b))
            extra.emplace_back(std::min(a, b), std::max(a, b));
    }
    return with_extra_edges(g, extra);
}

auto random_min_degree_graph(int n, int delta, Rng & rng) -> Graph
{
    if (delta < 0 || (n > 0 && delta > n - 1))
        fail(ErrorKind::InvalidArgument, "minimum degree " + std::to_string(delta) + " infeasible on " + std::to_string(n) + " vertices");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> e;
    std::vector<int> deficient;
    for (int v = 0; v < n; ++v)
        if (delta > 0)
            deficient.push_back(v);
    while (! deficient.empty()) {
        std::size_t vi = rng.below(deficient.size());
        int v = deficient[vi];
        std::vector<int> partners;
        for (int w : deficient)
            if (w != v && ! adj[v].contains(w))
                partners.push_back(w);
        int w;
        if (! partners.empty())
            w = partners[rng.below(partners.size())];
        else {
            do
                w = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            while (w == v || adj[v].contains(w));
        }
        adj[v].insert(w);
        adj[w].insert(v);
        ++deg[v];
        ++deg[w];
        e.emplace_back(std::min(v, w), std::max(v, w));
        std::erase_if(deficient, [&](int x) { return deg[x] >= delta; });
    }
    return Graph(n, e);
}

}
