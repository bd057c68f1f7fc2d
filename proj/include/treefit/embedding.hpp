#pragma once

#include <treefit/graph.hpp>
#include <treefit/tree.hpp>
#include <treefit/vertex_set.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treefit {

// Injective map from a set of tree vertices into V(G).
class PartialEmbedding {
public:
    PartialEmbedding() = default;
    PartialEmbedding(int tree_order, int graph_order);

    auto tree_order() const -> int { return static_cast<int>(map_.size()); }
    auto graph_order() const -> int { return static_cast<int>(inverse_.size()); }
    auto size() const -> int { return size_; }
    auto empty() const -> bool { return size_ == 0; }

    auto image(int t) const -> int { return map_[t]; }
    auto preimage(int g) const -> int { return inverse_[g]; }
    auto is_mapped(int t) const -> bool { return map_[t] != -1; }
    auto is_used(int g) const -> bool { return inverse_[g] != -1; }

    // Throws Error(InvalidArgument) if t is already mapped or g already used.
    void assign(int t, int g);
    void unassign(int t);

    auto domain() const -> VertexSet;
    auto domain_list() const -> std::vector<int>;
    auto image_set() const -> VertexSet;
    auto raw() const -> const std::vector<int> & { return map_; }

    // Copy keeping only the tree vertices in `keep`.
    auto restricted_to(const VertexSet & keep) const -> PartialEmbedding;

    friend auto operator==(const PartialEmbedding & a, const PartialEmbedding & b) -> bool { return a.map_ == b.map_; }

private:
    std::vector<int> map_;
    std::vector<int> inverse_;
    int size_ = 0;
};

struct Contains {
    PartialEmbedding embedding;
    std::string branch;
};

struct NotContained {
    std::string reason;
};

struct NotFound {
    long long rounds = 0;
    std::uint64_t seed = 0;
    int failure_exponent = 0;
    std::string reason;
};

using SolveOutcome = std::variant<Contains, NotContained, NotFound>;

auto is_contains(const SolveOutcome & o) -> bool;
auto is_not_contained(const SolveOutcome & o) -> bool;
auto is_not_found(const SolveOutcome & o) -> bool;
auto outcome_name(const SolveOutcome & o) -> std::string;

// Injective, edge preserving, sizes match, and the domain induces a
// connected subtree of t.
auto verify(const PartialEmbedding & e, const Graph & g, const Tree & t) -> bool;
// verify() plus a full domain.
auto verify_certificate(const Graph & g, const Tree & t, const PartialEmbedding & e) -> bool;

// Maps every vertex of `target` not yet mapped, in BFS order from the current
// domain, each onto the lowest-index unused neighbor (inside `allowed`, if
// given) of the image of its already mapped tree neighbor. Returns false,
// leaving a partial result, when some vertex finds no such neighbor. The
// domain must be nonempty and target ∪ domain connected.
auto greedy_extend(const Graph & g, const Tree & t, PartialEmbedding & e, const VertexSet & target,
    const VertexSet * allowed = nullptr) -> bool;

// Extension of a connected partial embedding to the whole of `target`
// (default: all of T) when |target| ≤ δ(G)+1. An empty partial is seeded by
// mapping the smallest target vertex to vertex 0.
auto chvatal_extend(const Graph & g, const Tree & t, const PartialEmbedding & partial) -> PartialEmbedding;
auto chvatal_extend(const Graph & g, const Tree & t, const PartialEmbedding & partial, const VertexSet & target) -> PartialEmbedding;

// Exact answer for connected G and |V(T)| ≤ min{|V(G)|, δ(G)+2}.
auto solve_delta_plus_two(const Graph & g, const Tree & t) -> SolveOutcome;

auto is_star(const Tree & t) -> bool;

// |Im(e) ∖ N_G[v]|
auto saved_non_neighbors(const Graph & g, const PartialEmbedding & e, int v) -> int;

// Places the k−1 leaves in `leaves` after extending `partial` to T − leaves.
// Throws HypothesisNotMet naming the anchor whose saved non-neighbor count
// is below its deficiency.
auto complete_leaves(const Graph & g, const Tree & t, const std::vector<int> & leaves, const PartialEmbedding & partial) -> PartialEmbedding;

}
