#include <treefit/error.hpp>
#include <treefit/numeric.hpp>
#include <treefit/preserving_paths.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace treefit {

auto is_k_preserving(const Graph & g, const VertexSet & s, int k) -> PreservingCheck
{
    int size = s.count();
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            continue;
        int non_neighbors = size - s.intersection_count(g.neighborhood(v));
        if (non_neighbors < neighbor_deficiency(g, v, k))
            return {false, v};
    }
    return {};
}

auto is_preserving_path(const Graph & g, const PreservingPath & p) -> bool
{
    if (p.vertices.empty())
        return false;
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
        if (i > 0 && ! g.adjacent(p.vertices[i - 1], v))
            return false;
    }
    return is_k_preserving(g, seen, p.k).ok;
}

namespace {
    // Whether G[allowed] has two vertices at distance at least d (or is
    // disconnected).
    auto diameter_at_least(const Graph & g, const VertexSet & allowed, int d) -> bool
    {
        auto forbidden = allowed.complement();
        bool found = false;
        allowed.for_each([&](int u) {
            if (found)
                return;
            auto dist = bfs_distances(g, u, &forbidden);
            allowed.for_each([&](int v) { found = found || dist[v] >= d; });
        });
        return found;
    }

    // A shortest path in G[allowed] with exactly `length` edges, if any.
    auto geodesic_of_length(const Graph & g, const VertexSet & allowed, int length) -> std::optional<std::vector<int>>
    {
        auto forbidden = allowed.complement();
        std::optional<std::vector<int>> result;
        allowed.for_each([&](int u) {
            if (result)
                return;
            auto dist = bfs_distances(g, u, &forbidden);
            allowed.for_each([&](int v) {
                if (! result && dist[v] == length)
                    result = shortest_path_avoiding(g, u, v, forbidden);
            });
        });
        return result;
    }

    void check_geodesic(const Graph & g, const std::vector<int> & path, const VertexSet & s)
    {
        VertexSet on(g.order(), path);
        for (int v = 0; v < g.order(); ++v) {
            if (s.contains(v))
                continue;
            int hits = on.intersection_count(g.neighborhood(v));
            if (on.contains(v) ? hits > 2 : hits > 3)
                panic("vertex " + std::to_string(v) + " sees " + std::to_string(hits) + " vertices of a shortest path");
        }
    }

    // Splices each vertex of s between two consecutive path neighbors until
    // no further vertex fits; scans s ascending and positions left to right.
    void insert_modulator(const Graph & g, std::vector<int> & path, const VertexSet & s)
    {
        VertexSet on(g.order(), path);
        for (bool changed = true; changed;) {
            changed = false;
            s.for_each([&](int u) {
                if (on.contains(u))
                    return;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (g.adjacent(u, path[i]) && g.adjacent(u, path[i + 1])) {
                        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, u);
                        on.insert(u);
                        changed = true;
                        return;
                    }
            });
        }
    }

    // Path on k vertices inside `component` starting at v.
    auto path_from(const Graph & g, const std::vector<int> & component, int v, int k) -> std::optional<std::vector<int>>
    {
        auto sub = induced_subgraph(g, component);
        if (sub.graph.min_degree() < k - 1)
            return std::nullopt;
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < k; ++i)
            edges.emplace_back(i, i + 1);
        Tree path(k, edges);
        PartialEmbedding seed(k, sub.graph.order());
        seed.assign(0, static_cast<int>(std::find(component.begin(), component.end(), v) - component.begin()));
        auto e = chvatal_extend(sub.graph, path, seed);
        std::vector<int> out;
        for (int i = 0; i < k; ++i)
            out.push_back(sub.original[e.image(i)]);
        return out;
    }

    // Shortest path in G from some vertex of `from` to some vertex of `to`.
    auto shortest_between(const Graph & g, const std::vector<int> & from, const VertexSet & to) -> std::vector<int>
    {
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
        std::deque<int> queue;
        for (int v : from) {
            parent[v] = -1;
            queue.push_back(v);
        }
        while (! queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (to.contains(x)) {
                std::vector<int> path;
                for (int y = x; y != -1; y = parent[y])
                    path.push_back(y);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (int y : g.neighbors(x))
                if (parent[y] == -2) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        return {};
    }

    // Greedy cover of `targets` by vertices of `allowed`: each pick is the
    // allowed vertex outside the neighborhoods of most remaining targets.
    auto greedy_non_dominating(const Graph & g, const VertexSet & allowed, const VertexSet & targets) -> VertexSet
    {
        std::vector<VertexSet> nbhd;
        nbhd.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v)
            nbhd.push_back(g.neighborhood(v));
        VertexSet remaining = targets;
        VertexSet picked(g.order());
        while (! remaining.empty()) {
            int best = -1, best_hits = 0;
            allowed.for_each([&](int u) {
                int hits = remaining.count() - remaining.intersection_count(nbhd[u]);
                if (hits > best_hits) {
                    best = u;
                    best_hits = hits;
                }
            });
            if (best < 0)
                panic("greedy cover stalled");
            picked.insert(best);
            remaining &= nbhd[best];
        }
        return picked;
    }
}

auto embed_via_preserving_path(const Graph & g, const Tree & t, const PreservingPath & p) -> PartialEmbedding
{
    int delta = g.min_degree();
    int k = p.k;
    int m = static_cast<int>(p.vertices.size());
    if (delta < k)
        fail(ErrorKind::PreconditionViolated, "δ(G) < k");
    if (t.order() != delta + k)
        fail(ErrorKind::PreconditionViolated, "tree order is not δ(G)+k");
    if (! is_preserving_path(g, p))
        fail(ErrorKind::PreconditionViolated, "path is not a k-preserving path");
    auto diam = tree_diameter(t);
    if (diam.length < 2 * m - 1)
        fail(ErrorKind::PreconditionViolated,
            "diam(T) = " + std::to_string(diam.length) + " is below 2|V(P)|−1 = " + std::to_string(2 * m - 1));

    auto q = tree_path(t, diam.u, diam.v);
    q.resize(static_cast<std::size_t>(2 * m));
    auto near = side_of_edge(t, q[m - 1], q[m]);
    std::vector<int> r;
    if (2 * near.count() <= t.order())
        r.assign(q.begin(), q.begin() + m);
    else
        r.assign(q.rbegin(), q.rbegin() + m);

    PartialEmbedding e(t.order(), g.order());
    VertexSet closed(t.order());
    for (int i = 0; i < m; ++i) {
        e.assign(r[i], p.vertices[i]);
        closed.insert(r[i]);
        for (int y : t.neighbors(r[i]))
            closed.insert(y);
    }
    if (! greedy_extend(g, t, e, closed))
        panic("neighbors of the path part found no free vertex");
    if (! greedy_extend(g, t, e, all_vertices(t)))
        panic("growth along a preserving path ran out of free neighbors");
    if (! verify_certificate(g, t, e))
        panic("preserving-path embedding does not verify");
    return e;
}

auto try_modulator_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> std::optional<PreservingPath>
{
    if (k < 1 || g.order() == 0 || s.count() >= g.order())
        return std::nullopt;
    auto rest = s.complement();
    std::vector<int> path;
    auto components = connected_components(g, rest);
    bool use_rest = components.size() == 1;
    if (! use_rest && diameter_at_least(g, VertexSet::full(g.order()), 2 * k)) {
        // G itself has two vertices 2k apart: work with the empty modulator
        rest = VertexSet::full(g.order());
        use_rest = true;
    }
    if (use_rest) {
        auto geodesic = geodesic_of_length(g, rest, 2 * k);
        if (! geodesic)
            return std::nullopt;
        path = std::move(*geodesic);
        check_geodesic(g, path, rest.complement());
    } else {
        VertexSet second(g.order(), components[1]);
        auto bridge = shortest_between(g, components[0], second);
        if (bridge.empty())
            return std::nullopt;
        auto r1 = path_from(g, components[0], bridge.front(), k);
        auto r2 = path_from(g, components[1], bridge.back(), k);
        if (! r1 || ! r2)
            return std::nullopt;
        path.assign(r1->rbegin(), r1->rend());
        path.insert(path.end(), bridge.begin() + 1, bridge.end());
        path.insert(path.end(), r2->begin() + 1, r2->end());
    }
    insert_modulator(g, path, s);
    PreservingPath out{path, k};
    if (! is_preserving_path(g, out))
        return std::nullopt;
    return out;
}

auto modulator_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> PreservingPath
{
    if (k < 1)
        fail(ErrorKind::PreconditionViolated, "k must be positive");
    if (g.order() == 0 || ! is_connected(g))
        fail(ErrorKind::PreconditionViolated, "graph is not connected");
    if (g.min_degree() < s.count() + k - 1)
        fail(ErrorKind::PreconditionViolated, "δ(G) < |S|+k−1");
    if (s.count() >= g.order() || ! diameter_at_least(g, s.complement(), 2 * k))
        fail(ErrorKind::PreconditionViolated, "diam(G−S) < 2k");
    auto p = try_modulator_to_preserving_path(g, s, k);
    if (! p)
        panic("diameter modulator gave no preserving path");
    if (p->length() > 4 * k - 2 + s.count())
        panic("preserving path from a modulator exceeds 4k−2+|S|");
    return *p;
}

auto try_set_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> std::optional<PreservingPath>
{
    if (k < 1 || g.order() == 0 || ! is_k_preserving(g, s, k).ok)
        return std::nullopt;
    if (s.empty())
        return PreservingPath{{0}, k};
    std::vector<int> path{s.first()};
    VertexSet on(g.order(), path);
    while (true) {
        auto next = s - on;
        if (next.empty())
            break;
        auto behind = on;
        behind.erase(path.back());
        if (diameter_at_least(g, behind.complement(), 2 * k))
            return try_modulator_to_preserving_path(g, behind, k);
        auto hop = shortest_path_avoiding(g, path.back(), next.first(), behind);
        if (! hop)
            return std::nullopt;
        for (std::size_t i = 1; i < hop->size(); ++i) {
            path.push_back((*hop)[i]);
            on.insert((*hop)[i]);
        }
    }
    PreservingPath out{path, k};
    if (! is_preserving_path(g, out))
        return std::nullopt;
    return out;
}

auto set_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> PreservingPath
{
    if (k < 1)
        fail(ErrorKind::PreconditionViolated, "k must be positive");
    if (g.order() == 0 || ! is_connected(g))
        fail(ErrorKind::PreconditionViolated, "graph is not connected");
    auto check = is_k_preserving(g, s, k);
    if (! check.ok)
        fail(ErrorKind::PreconditionViolated, "set is not k-preserving at vertex " + std::to_string(check.violator));
    if (g.min_degree() < (2 * k - 1) * s.count())
        fail(ErrorKind::PreconditionViolated, "δ(G) < (2k−1)|S|");
    auto p = try_set_to_preserving_path(g, s, k);
    if (! p)
        panic("preserving set gave no preserving path");
    if (p->length() > (2 * k - 1) * s.count())
        panic("preserving path from a set exceeds (2k−1)|S|");
    return *p;
}

auto low_degree_vertices(const Graph & g, double epsilon) -> VertexSet
{
    VertexSet a(g.order());
    double cut = (1 + epsilon) * g.min_degree();
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < cut)
            a.insert(v);
    return a;
}

auto anti_dominating_bound(int delta, double epsilon) -> double
{
    return 4 * std::log(delta) / std::log1p(epsilon) + 1;
}

auto anti_dominating_set(const Graph & g, double epsilon) -> VertexSet
{
    int delta = g.min_degree();
    if (! (epsilon > 0 && epsilon < 1))
        fail(ErrorKind::PreconditionViolated, "ε must lie in (0, 1)");
    if (g.order() == 0 || delta < 2)
        fail(ErrorKind::PreconditionViolated, "δ(G) < 2");
    if (g.order() < (1 + epsilon) * (1 + epsilon) * delta)
        fail(ErrorKind::PreconditionViolated, "n < (1+ε)²δ(G)");
    auto s = greedy_non_dominating(g, VertexSet::full(g.order()), low_degree_vertices(g, epsilon));
    if (s.count() >= anti_dominating_bound(delta, epsilon))
        panic("anti-dominating set exceeds its size bound");
    return s;
}

auto preserving_set_budget(const Graph & g, int k, int p) -> double
{
    return 4.0 * static_cast<double>(saturating_power(k, p)) * std::log2(std::max(g.min_degree(), 1));
}

auto preserving_set_rounds(const Graph & g, int k) -> VertexSet
{
    VertexSet deficient(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (neighbor_deficiency(g, v, k) > 0)
            deficient.insert(v);
    VertexSet taken(g.order());
    for (int round = 1; round < k; ++round)
        taken |= greedy_non_dominating(g, taken.complement(), deficient - taken);
    auto check = is_k_preserving(g, taken, k);
    if (! check.ok)
        panic("greedy rounds left vertex " + std::to_string(check.violator) + " short of non-neighbors");
    return taken;
}

auto build_preserving_set(const Graph & g, int k, int p) -> VertexSet
{
    if (k <= 1)
        return VertexSet(g.order());
    if (p <= 1)
        fail(ErrorKind::PreconditionViolated, "p must exceed 1");
    double delta = g.min_degree();
    double q = preserving_set_budget(g, k, p);
    double kp = static_cast<double>(saturating_power(k, p));
    if (g.order() < (1 + 3 / kp) * delta + q * k)
        fail(ErrorKind::PreconditionViolated, "n < (1+3/k^p)δ(G)+qk");
    if (delta < q * k * (kp + 1))
        fail(ErrorKind::PreconditionViolated, "δ(G) < qk(k^p+1)");
    auto s = preserving_set_rounds(g, k);
    if (s.count() > q * k)
        panic("preserving set exceeds qk");
    return s;
}

auto try_large_diameter(const Graph & g, const Tree & t, int k) -> std::optional<PartialEmbedding>
{
    int delta = g.min_degree();
    int own = t.order() - delta;
    if (own > k || t.order() > g.order())
        return std::nullopt;
    if (own <= 1)
        return chvatal_extend(g, t, PartialEmbedding(t.order(), g.order()));
    if (! is_connected(g) || delta < own)
        return std::nullopt;
    auto path = try_set_to_preserving_path(g, preserving_set_rounds(g, k), k);
    if (! path || tree_diameter(t).length < 2 * static_cast<int>(path->vertices.size()) - 1)
        return std::nullopt;
    // a k-preserving path is preserving for every smaller parameter
    path->k = own;
    return embed_via_preserving_path(g, t, *path);
}

auto solve_large_diameter(const Graph & g, const Tree & t, int k) -> PartialEmbedding
{
    if (k < 3)
        fail(ErrorKind::PreconditionViolated, "k < 3");
    if (g.order() == 0 || ! is_connected(g))
        fail(ErrorKind::PreconditionViolated, "graph is not connected");
    int delta = g.min_degree();
    double k4 = std::pow(k, 4);
    if (g.order() < (1 + 4 / k4) * delta)
        fail(ErrorKind::PreconditionViolated, "n < (1+4/k⁴)δ(G)");
    if (delta <= saturating_power(k, 16))
        fail(ErrorKind::PreconditionViolated, "δ(G) ≤ k^16");
    if (t.order() > delta + k)
        fail(ErrorKind::PreconditionViolated, "tree has more than δ(G)+k vertices");
    if (tree_diameter(t).length < 8 * std::pow(k, 6) * std::log2(delta))
        fail(ErrorKind::PreconditionViolated, "diam(T) < 8k⁶·log δ(G)");
    if (t.order() <= delta + 1)
        return chvatal_extend(g, t, PartialEmbedding(t.order(), g.order()));
    auto s = build_preserving_set(g, k, 4);
    auto path = set_to_preserving_path(g, s, k);
    path.k = t.order() - delta;
    return embed_via_preserving_path(g, t, path);
}

}
