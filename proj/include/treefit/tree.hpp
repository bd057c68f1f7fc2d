#pragma once

#include <treefit/graph.hpp>
#include <treefit/vertex_set.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treefit {

// Guest tree on 0..n-1. Subtrees elsewhere are VertexSets over these
// indices; they are never re-indexed.
class Tree {
public:
    Tree() = default;
    // Throws Error(InvalidArgument) unless the edges form a spanning tree.
    Tree(int n, const std::vector<Edge> & edges);

    auto order() const -> int { return static_cast<int>(adj_.size()); }
    auto degree(int v) const -> int { return static_cast<int>(adj_[v].size()); }
    auto neighbors(int v) const -> std::span<const int> { return adj_[v]; }
    auto adjacent(int u, int v) const -> bool;
    auto is_leaf(int v) const -> bool { return degree(v) == 1; }
    auto leaves() const -> std::vector<int>;
    auto edges() const -> std::vector<Edge>;
    auto max_degree() const -> int;

private:
    std::vector<std::vector<int>> adj_;
};

auto all_vertices(const Tree & t) -> VertexSet;

// Degree of v inside the subtree induced by `within`.
auto degree_within(const Tree & t, const VertexSet & within, int v) -> int;
auto is_connected_within(const Tree & t, const VertexSet & within) -> bool;

struct LeafDegree {
    int value;
    int witness;
};

// Maximum number of leaf neighbors over all vertices; lowest-index witness.
auto leaf_degree(const Tree & t) -> LeafDegree;
auto leaf_neighbors(const Tree & t, int v) -> std::vector<int>;
// Vertices adjacent to at least one leaf.
auto leaf_adjacent_vertices(const Tree & t) -> std::vector<int>;

auto tree_distances(const Tree & t, int source, const VertexSet * within = nullptr) -> std::vector<int>;
auto tree_path(const Tree & t, int u, int v) -> std::vector<int>;

struct TreeDiameter {
    int length;
    int u;
    int v;
};

auto tree_diameter(const Tree & t) -> TreeDiameter;

// Executable form of the bound "n ≥ q·diam(T) implies at least q leaves".
// Throws HypothesisNotMet when n < q·diam(T) or diam(T) < 1.
auto leaf_count_lower_bound_holds(const Tree & t, int q) -> bool;

// Most balanced edge whose removal leaves two components of at least q
// vertices each (ties toward lexicographically smaller edge), or nothing.
auto find_separable_edge(const Tree & t, int q) -> std::optional<Edge>;
auto is_separable(const Tree & t, int q) -> bool;

// Vertex whose removal leaves components of at most n/2 vertices; smaller
// index on ties.
auto centroid(const Tree & t) -> int;

// Edge from the centroid to its largest component; both sides have at least
// ⌈(n−1)/Δ(T)⌉ vertices.
auto find_balanced_edge(const Tree & t) -> Edge;

// Vertices of the component of T − uv containing u.
auto side_of_edge(const Tree & t, int u, int v) -> VertexSet;

struct RootedView {
    RootedView(const Tree & t, int root, const VertexSet * within = nullptr);

    int root;
    std::vector<int> parent;    // -1 at the root and outside the view
    std::vector<std::vector<int>> children;
    std::vector<int> size;
    std::vector<int> depth;
    std::vector<int> height;
    std::vector<int> order;    // BFS order of the vertices in the view
};

struct InducedTree {
    Tree tree;
    std::vector<int> original;    // local index -> T vertex
    std::vector<int> local;       // T vertex -> local index, -1 outside
};

// Re-indexed copy of the subtree induced by `within` (which must be connected),
// local indices in increasing order of T indices.
auto induced_subtree(const Tree & t, const VertexSet & within) -> InducedTree;

using TrivialPath = std::vector<int>;

// Decomposition of E(T) into maximal paths whose inner vertices have degree
// two. Each path runs from its smaller endpoint. The overload works inside
// the subtree `within` and additionally never passes through `terminals`.
auto maximal_trivial_paths(const Tree & t) -> std::vector<TrivialPath>;
auto maximal_trivial_paths(const Tree & t, const VertexSet & within, const VertexSet & terminals) -> std::vector<TrivialPath>;

// Minimal subtree containing w.
auto minimal_spanning_subtree(const Tree & t, const VertexSet & w) -> VertexSet;

struct ContractedPath {
    std::vector<int> original;    // full vertex sequence in T
    std::vector<int> kept;        // retained vertices, endpoints included
    int owed;                     // edges removed by the contraction
};

struct Contraction {
    Tree tree;                       // re-indexed contracted tree
    std::vector<int> original_id;    // contracted index -> T vertex
    std::vector<ContractedPath> paths;

    auto owed_total() const -> int;
};

// Every maximal trivial path longer than cap is shortened to exactly cap
// edges by dropping inner vertices after the first cap−1.
auto contract_trivial_paths(const Tree & t, int cap) -> Contraction;
auto contract_trivial_paths(const Tree & t, const VertexSet & within, const VertexSet & terminals, int cap) -> Contraction;

using CanonicalCode = std::string;

// AHU code of the subtree hanging from `root` (inside `within` if given).
auto canonical_code(const Tree & t, int root, const VertexSet * within = nullptr) -> CanonicalCode;
// Code of the subtree of `v` in a rooted view.
auto canonical_code(const Tree & t, const RootedView & view, int v) -> CanonicalCode;

// Whether the rooted tree (small, small_root) embeds into (big, big_root)
// with roots matched and parent/child relations preserved.
auto is_rooted_subtree(const Tree & small, int small_root, const Tree & big, int big_root,
    const VertexSet * small_within = nullptr, const VertexSet * big_within = nullptr) -> bool;

}
