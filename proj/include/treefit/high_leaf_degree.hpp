#pragma once

#include <treefit/color_coding.hpp>
#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/rng.hpp>
#include <treefit/tree.hpp>

#include <optional>
#include <string>
#include <vector>

namespace treefit {

// w ∈ N(v) is expanding for v when it has at least k−1 neighbors outside N[v].
auto is_expanding(const Graph & g, int v, int w, int k) -> bool;
auto expanding_neighbors(const Graph & g, int v, int k) -> std::vector<int>;

struct ExpandingWalk {
    std::vector<int> path;    // starts at v
    int outside = 0;          // path vertices outside N[v]
};

// Outer / non-expanding / expanding rule automaton from v, at most `length`
// steps, lowest-index choices. Throws NotEnoughExpanding unless v has at
// least 3k expanding neighbors.
auto build_expanding_walk(const Graph & g, int v, int length, int k) -> ExpandingWalk;
// Same automaton without the precondition.
auto run_expanding_walk(const Graph & g, int v, int length, int k) -> ExpandingWalk;

struct HighLeafThresholds {
    int delta_factor = 11;      // below δ < factor·k² use plain color coding
    int path_factor = 3;        // long path from s: factor·k edges
    int expanding_factor = 3;   // expanding case: factor·k expanding neighbors
    int common_factor = 6;      // near pair: fewer than factor·k common neighbors
    bool allow_high_degree = true;
    bool allow_expanding = true;
    bool allow_dense = true;
};

struct LadderResult {
    PartialEmbedding embedding;
    std::string step;    // high_degree, expanding, dense_far or dense_near
};

// Full embedding when |V(T)| = δ(G)+k, s has k−1 leaf neighbors, a path of
// length 3k starts at s, δ(G) ≥ 11k² and |V(G)| ≥ |V(T)|, for connected G.
// Throws PreconditionViolated otherwise; panics if a step that cannot fail does.
auto embed_high_leaf_degree_unconditional(const Graph & g, const Tree & t, int s, int k) -> LadderResult;

// The same ladder with explicit thresholds and no literal precondition check;
// nothing when every applicable step fails.
auto try_embed_high_leaf_degree(const Graph & g, const Tree & t, int s, int k, const HighLeafThresholds & th)
    -> std::optional<LadderResult>;

// For every image v of s: anchored hitting subtree with F = V ∖ N[v] and quota
// ndef(v), then leaf completion. Exact when every search was exact.
auto anchored_leaf_search(const Graph & g, const Tree & t, int s, int k, const ColorCodingOptions & options, Rng & rng)
    -> SolveOutcome;

struct HighLeafConfig {
    bool strict = true;    // strict: literal thresholds, failures panic
    HighLeafThresholds thresholds;
    ColorCodingOptions color;
};

// Driver for ld(T) ≥ k−1 and |V(T)| = δ(G)+k.
auto solve_high_leaf_degree(const Graph & g, const Tree & t, int k, const HighLeafConfig & config, Rng & rng) -> SolveOutcome;

}
