#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/tree.hpp>
#include <treefit/vertex_set.hpp>

#include <optional>
#include <string>
#include <variant>

namespace treefit {

struct TrivialPathTrace {
    int insertions = 0;
    bool hop_fallback = false;      // threading hit a wall, preserving path used
    bool stall_fallback = false;    // re-expansion stuck, re-embedded through 2k stuck vertices
};

// Reserves k−1 leaves (a diametral pair first), contracts the long trivial
// paths of the subtree spanned by their neighbors to 2k edges, embeds it,
// threads the missing non-neighbors of the anchors into one contracted path
// and re-expands by inserting common neighbors. Falls back to a preserving
// path when threading or re-expansion gets stuck. Strict form checks k ≥ 3,
// connected G, |V(T)| = δ+k, ld(T) < k, δ ≥ 2k·diam(T) and diam(T) ≥ 2k⁴.
auto embed_via_trivial_paths(const Graph & g, const Tree & t, int k, TrivialPathTrace * trace = nullptr) -> PartialEmbedding;
// Any k = |V(T)|−δ ≥ 2; for k = 2 the far end of the diameter still spans
// the subtree. Nothing when a step does not go through.
auto try_embed_via_trivial_paths(const Graph & g, const Tree & t, TrivialPathTrace * trace = nullptr)
    -> std::optional<PartialEmbedding>;

// Maps a maximum-degree vertex of T onto the first q-escape vertex and grows
// fresh branches there until every leaf anchor has enough non-neighbors.
// Checks k ≥ 2, |V(T)| = δ+k, q ≥ 2k²·diam(T), δ ≥ q, Δ(T) ≥ k², ld(T) < k
// and that a q-escape vertex exists.
auto embed_via_escape(const Graph & g, const Tree & t, int k, int q) -> PartialEmbedding;
auto try_embed_via_escape(const Graph & g, const Tree & t, int u) -> std::optional<PartialEmbedding>;

using EmbeddingOrSeparator = std::variant<PartialEmbedding, VertexSet>;

// Grows branches below (k−1)² disjoint depth-two subtrees, one per step.
// When no step is possible returns a vertex separator, already checked to
// disconnect G. Checks k ≥ 2, |V(T)| = δ+k, ld(T) < k, Δ(T) < k² and
// δ ≥ k⁵·diam(T).
auto embed_or_separator(const Graph & g, const Tree & t, int k) -> EmbeddingOrSeparator;
auto try_embed_or_separator(const Graph & g, const Tree & t) -> std::optional<EmbeddingOrSeparator>;

// Splits T at its most balanced edge and embeds the two halves on the two
// sides of a minimal sub-separator of s, joined through one separator
// vertex. Checks connected G, s a separator, |V(T)| = δ+k, δ ≥ 3|s|,
// δ ≥ 15k, ld(T) < k and T (|s|+k)-separable.
auto embed_with_separator(const Graph & g, const Tree & t, int k, const VertexSet & s) -> PartialEmbedding;
// `flip` puts the smaller half on the side the automatic choice rejects.
auto try_embed_with_separator(const Graph & g, const Tree & t, const VertexSet & s, bool flip = false)
    -> std::optional<PartialEmbedding>;

struct MediumThresholds {
    long long large_diameter = 0;    // diam(T) at which trivial paths are tried
    long long escape_q = 0;
    long long separable_q = 0;

    // 2k^11, 4k^13, 2k^14
    static auto literal(int k) -> MediumThresholds;
};

struct MediumResult {
    PartialEmbedding embedding;
    std::string branch;
};

// Literal hypotheses (k ≥ 3, δ ≥ k^17, n ≥ δ+2k^14, diam(T) ≤ 8k⁶·log δ, and
// a large diameter, a 4k^13-escape vertex or a 2k^14-separable T).
auto solve_medium(const Graph & g, const Tree & t, int k) -> MediumResult;
// Same dispatch order with the given thresholds; a branch that does not go
// through hands over to the next one.
auto try_solve_medium(const Graph & g, const Tree & t, const MediumThresholds & thresholds) -> std::optional<MediumResult>;

}
