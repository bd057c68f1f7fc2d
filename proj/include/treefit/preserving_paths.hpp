#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/tree.hpp>
#include <treefit/vertex_set.hpp>

#include <optional>
#include <vector>

namespace treefit {

struct PreservingCheck {
    bool ok = true;
    int violator = -1;    // first vertex outside S short of non-neighbors
};

// Every v ∉ S has at least ndef(v) non-neighbors in S.
auto is_k_preserving(const Graph & g, const VertexSet & s, int k) -> PreservingCheck;

struct PreservingPath {
    std::vector<int> vertices;    // consecutive vertices adjacent in G
    int k = 0;

    auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
};

// Checks the path shape and the preserving property.
auto is_preserving_path(const Graph & g, const PreservingPath & p) -> bool;

// Full embedding of T with |V(T)| = δ(G)+k and diam(T) ≥ 2|V(P)|−1: the
// short half of a diametral subpath goes onto P, everything else greedily.
auto embed_via_preserving_path(const Graph & g, const Tree & t, const PreservingPath & p) -> PartialEmbedding;

// k-preserving path of length at most 4k−2+|S| for connected G with
// diam(G−S) ≥ 2k and δ(G) ≥ |S|+k−1. Throws PreconditionViolated.
auto modulator_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> PreservingPath;
// The construction without the hypotheses; nothing when a step cannot be
// carried out or the result is not preserving.
auto try_modulator_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> std::optional<PreservingPath>;

// k-preserving path of length at most (2k−1)|S| through the k-preserving set
// S, for connected G with δ(G) ≥ (2k−1)|S|. Throws PreconditionViolated.
auto set_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> PreservingPath;
auto try_set_to_preserving_path(const Graph & g, const VertexSet & s, int k) -> std::optional<PreservingPath>;

// Vertices of degree below (1+ε)δ(G).
auto low_degree_vertices(const Graph & g, double epsilon) -> VertexSet;

// Greedy set S with a non-neighbor (v itself counts) of every vertex of
// degree below (1+ε)δ(G). Requires δ(G) ≥ 2, 0 < ε < 1 and n ≥ (1+ε)²δ(G).
auto anti_dominating_set(const Graph & g, double epsilon) -> VertexSet;

// Bound on the anti-dominating set: 4·log δ / log(1+ε) + 1 (strict).
auto anti_dominating_bound(int delta, double epsilon) -> double;

// q = 4k^p·log₂ δ(G)
auto preserving_set_budget(const Graph & g, int k, int p) -> double;

// k−1 rounds of the greedy on G minus the accumulated set, ε = 1/k^p.
// Throws PreconditionViolated unless n ≥ (1+3/k^p)δ+qk and δ ≥ qk(k^p+1).
auto build_preserving_set(const Graph & g, int k, int p) -> VertexSet;
// The same rounds without the hypotheses; the result is always k-preserving.
auto preserving_set_rounds(const Graph & g, int k) -> VertexSet;

// Preserving set (p = 4), then path, then embedding, for |V(T)| ≤ δ(G)+k.
// Throws PreconditionViolated when a hypothesis fails; panics if a step that
// cannot fail does.
auto solve_large_diameter(const Graph & g, const Tree & t, int k) -> PartialEmbedding;
// Same pipeline without the hypotheses; nothing when a step does not apply.
auto try_large_diameter(const Graph & g, const Tree & t, int k) -> std::optional<PartialEmbedding>;

}
