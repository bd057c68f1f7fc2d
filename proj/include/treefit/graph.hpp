#pragma once

#include <treefit/vertex_set.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace treefit {

using Edge = std::pair<int, int>;

// Simple undirected graph on 0..n-1, immutable after construction.
// Adjacency is stored compressed with sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    // Throws Error(InvalidArgument) on loops, parallel edges or out-of-range endpoints.
    Graph(int n, const std::vector<Edge> & edges);

    auto order() const -> int { return n_; }
    auto edge_count() const -> long long { return static_cast<long long>(adj_.size() / 2); }
    auto degree(int v) const -> int { return offsets_[v + 1] - offsets_[v]; }
    auto neighbors(int v) const -> std::span<const int>
    {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    auto adjacent(int u, int v) const -> bool;
    auto neighborhood(int v) const -> VertexSet;
    auto closed_neighborhood(int v) const -> VertexSet;
    auto edges() const -> std::vector<Edge>;

    // Cached; min_degree throws EmptyGraph when n = 0.
    auto min_degree() const -> int;
    auto max_degree() const -> int;

private:
    int n_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> adj_;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

auto min_degree(const Graph & g) -> int;
auto max_degree(const Graph & g) -> int;

// max{(δ(G)+k−1) − deg(v), 0}
auto neighbor_deficiency(const Graph & g, int v, int k) -> int;

using Matching = std::vector<Edge>;

// Maximum matching between disjoint sides using only edges of g that cross.
// Pairs are (left vertex, right vertex).
auto max_bipartite_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> Matching;

// Minimum vertex cover of the bipartite cut graph between left and right,
// recovered from a maximum matching by alternating reachability.
auto min_cut_vertex_cover(const Graph & g, const VertexSet & left, const VertexSet & right) -> VertexSet;

auto is_q_escape(const Graph & g, int v, int q) -> bool;

auto nonescape_separator(const Graph & g, int v, int q) -> VertexSet;

// Unreachable vertices get distance n. Vertices in `forbidden` are never
// entered (the source itself is always allowed).
auto bfs_distances(const Graph & g, int source, const VertexSet * forbidden = nullptr) -> std::vector<int>;

auto shortest_path_avoiding(const Graph & g, int s, int t, const VertexSet & forbidden) -> std::optional<std::vector<int>>;

struct Diameter {
    int length;
    int u;
    int v;
};

// Throws Disconnected.
auto diameter(const Graph & g) -> Diameter;

// Diameter of G[allowed]; length is g.order() when G[allowed] is
// disconnected (pair then straddles two components). Requires allowed ≠ ∅.
auto diameter_within(const Graph & g, const VertexSet & allowed) -> Diameter;

auto connected_components(const Graph & g, const VertexSet & allowed) -> std::vector<std::vector<int>>;
auto is_connected(const Graph & g) -> bool;

// True iff G − s has at least two components.
auto is_separator(const Graph & g, const VertexSet & s) -> bool;

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;    // new index -> old index
};

auto induced_subgraph(const Graph & g, const std::vector<int> & vertices) -> InducedSubgraph;

}
