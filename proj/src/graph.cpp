#include <treefit/error.hpp>
#include <treefit/graph.hpp>

#include <algorithm>
#include <deque>
#include <string>

namespace treefit {

Graph::Graph(int n, const std::vector<Edge> & edges) : n_(n)
{
    if (n < 0)
        fail(ErrorKind::InvalidArgument, "negative vertex count");

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::InvalidArgument, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v)
            fail(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }

    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(static_cast<std::size_t>(offsets_[n]));
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }

    for (int v = 0; v < n; ++v) {
        auto b = adj_.begin() + offsets_[v], e = adj_.begin() + offsets_[v + 1];
        std::sort(b, e);
        if (std::adjacent_find(b, e) != e)
            fail(ErrorKind::InvalidArgument, "parallel edge at vertex " + std::to_string(v));
    }

    if (n > 0) {
        min_degree_ = max_degree_ = degree(0);
        for (int v = 1; v < n; ++v) {
            min_degree_ = std::min(min_degree_, degree(v));
            max_degree_ = std::max(max_degree_, degree(v));
        }
    }
}

auto Graph::adjacent(int u, int v) const -> bool
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

auto Graph::neighborhood(int v) const -> VertexSet
{
    VertexSet s(n_);
    for (int w : neighbors(v))
        s.insert(w);
    return s;
}

auto Graph::closed_neighborhood(int v) const -> VertexSet
{
    auto s = neighborhood(v);
    s.insert(v);
    return s;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(adj_.size() / 2);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::min_degree() const -> int
{
    if (n_ == 0)
        fail(ErrorKind::EmptyGraph, "minimum degree of the empty graph");
    return min_degree_;
}

auto Graph::max_degree() const -> int
{
    if (n_ == 0)
        fail(ErrorKind::EmptyGraph, "maximum degree of the empty graph");
    return max_degree_;
}

auto min_degree(const Graph & g) -> int
{
    return g.min_degree();
}

auto max_degree(const Graph & g) -> int
{
    return g.max_degree();
}

auto neighbor_deficiency(const Graph & g, int v, int k) -> int
{
    return std::max(g.min_degree() + k - 1 - g.degree(v), 0);
}

namespace {
    struct MatchingState {
        std::vector<int> mate;    // over all vertices of g, -1 if free
    };

    auto compute_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> MatchingState
    {
        int n = g.order();
        MatchingState st{std::vector<int>(static_cast<std::size_t>(n), -1)};
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::vector<int> seen(static_cast<std::size_t>(n), -1);

        // greedy start
        left.for_each([&](int u) {
            for (int w : g.neighbors(u))
                if (right.contains(w) && st.mate[w] == -1) {
                    st.mate[u] = w;
                    st.mate[w] = u;
                    break;
                }
        });

        int stamp = 0;
        left.for_each([&](int root) {
            if (st.mate[root] != -1)
                return;
            ++stamp;
            // BFS over left vertices; parent[] on right vertices records the left vertex we came from
            std::deque<int> queue{root};
            seen[root] = stamp;
            int free_right = -1;
            while (! queue.empty() && free_right == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.neighbors(u)) {
                    if (! right.contains(w) || seen[w] == stamp)
                        continue;
                    seen[w] = stamp;
                    parent[w] = u;
                    if (st.mate[w] == -1) {
                        free_right = w;
                        break;
                    }
                    int next = st.mate[w];
                    if (seen[next] != stamp) {
                        seen[next] = stamp;
                        queue.push_back(next);
                    }
                }
            }
            for (int w = free_right; w != -1;) {
                int u = parent[w];
                int prev = st.mate[u];
                st.mate[u] = w;
                st.mate[w] = u;
                w = prev;
            }
        });
        return st;
    }
}

auto max_bipartite_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> Matching
{
    if (left.intersects(right))
        fail(ErrorKind::InvalidArgument, "matching sides overlap");
    auto st = compute_matching(g, left, right);
    Matching result;
    left.for_each([&](int u) {
        if (st.mate[u] != -1)
            result.emplace_back(u, st.mate[u]);
    });
    return result;
}

auto min_cut_vertex_cover(const Graph & g, const VertexSet & left, const VertexSet & right) -> VertexSet
{
    if (left.intersects(right))
        fail(ErrorKind::InvalidArgument, "matching sides overlap");
    auto st = compute_matching(g, left, right);
    int n = g.order();
    VertexSet reached(n);
    std::deque<int> queue;
    left.for_each([&](int u) {
        if (st.mate[u] == -1) {
            reached.insert(u);
            queue.push_back(u);
        }
    });
    while (! queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (! right.contains(w) || reached.contains(w) || st.mate[u] == w)
                continue;
            reached.insert(w);
            int next = st.mate[w];
            if (next != -1 && ! reached.contains(next)) {
                reached.insert(next);
                queue.push_back(next);
            }
        }
    }
    return (left - reached) | (right & reached);
}

auto is_q_escape(const Graph & g, int v, int q) -> bool
{
    if (g.degree(v) >= g.min_degree() + q)
        return true;
    auto inside = g.closed_neighborhood(v);
    auto outside = inside.complement();
    return static_cast<int>(max_bipartite_matching(g, inside, outside).size()) >= q;
}

auto nonescape_separator(const Graph & g, int v, int q) -> VertexSet
{
    if (is_q_escape(g, v, q))
        fail(ErrorKind::IsEscapeVertex, "vertex " + std::to_string(v) + " is a " + std::to_string(q) + "-escape vertex");
    auto inside = g.closed_neighborhood(v);
    auto outside = inside.complement();
    if (outside.empty())
        fail(ErrorKind::TooSmall, "closed neighborhood covers the whole graph");
    auto cover = min_cut_vertex_cover(g, inside, outside);
    if (cover.contains(v))
        panic("separator contains the anchor vertex");
    if ((outside - cover).empty())
        fail(ErrorKind::TooSmall, "far side of the separator is empty");
    return cover;
}

auto bfs_distances(const Graph & g, int source, const VertexSet * forbidden) -> std::vector<int>
{
    int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (dist[w] == n && ! (forbidden && forbidden->contains(w))) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

auto shortest_path_avoiding(const Graph & g, int s, int t, const VertexSet & forbidden) -> std::optional<std::vector<int>>
{
    int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size() && ! seen[t]; ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (! seen[w] && ! forbidden.contains(w)) {
                seen[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (! seen[t])
        return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

auto diameter_within(const Graph & g, const VertexSet & allowed) -> Diameter
{
    int n = g.order();
    auto forbidden = allowed.complement();
    Diameter best{-1, -1, -1};
    allowed.for_each([&](int u) {
        auto dist = bfs_distances(g, u, &forbidden);
        allowed.for_each([&](int v) {
            if (v > u && dist[v] > best.length)
                best = {dist[v], u, v};
        });
    });
    if (best.length < 0) {
        int u = allowed.first();
        best = {0, u, u};
    }
    if (best.length > n)
        best.length = n;
    return best;
}

auto diameter(const Graph & g) -> Diameter
{
    if (g.order() == 0)
        fail(ErrorKind::EmptyGraph, "diameter of the empty graph");
    auto d = diameter_within(g, VertexSet::full(g.order()));
    if (d.length >= g.order())
        fail(ErrorKind::Disconnected, "graph is disconnected");
    return d;
}

auto connected_components(const Graph & g, const VertexSet & allowed) -> std::vector<std::vector<int>>
{
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> result;
    allowed.for_each([&](int root) {
        if (seen[root])
            return;
        std::vector<int> comp{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (! seen[w] && allowed.contains(w)) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    });
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    if (g.order() == 0)
        return true;
    return connected_components(g, VertexSet::full(g.order())).size() == 1;
}

auto is_separator(const Graph & g, const VertexSet & s) -> bool
{
    return connected_components(g, s.complement()).size() >= 2;
}

auto induced_subgraph(const Graph & g, const std::vector<int> & vertices) -> InducedSubgraph
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (index[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), index[w]);
    return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

}
