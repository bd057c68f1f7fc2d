#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/rng.hpp>
#include <treefit/tree.hpp>
#include <treefit/vertex_set.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace treefit {

// A hitting constraint: the image must contain at least `quota` members.
struct Family {
    VertexSet members;
    int quota = 0;
};

// Fixed images as (tree vertex, graph vertex) pairs.
using Anchoring = std::vector<std::pair<int, int>>;

struct ColorCodingOptions {
    int failure_exponent = 20;
    std::uint64_t node_cap = 0;    // exact search budget; 0 means unlimited
    long long max_trials = 0;      // 0 means the full schedule
    int exact_threshold = 6;       // trees this small are always searched exactly
    bool force_randomized = false;
};

struct Coloring {
    std::vector<int> color;    // -1: the vertex may not be used
    int palette = 0;
    std::uint64_t seed = 0;
};

// ⌈e^size · failure_exponent · ln 2⌉, at least 1.
auto trial_count(int size, int failure_exponent) -> long long;

// Anchored images take the reserved colors 0..|kappa|−1 in order; every other
// vertex draws uniformly from the remaining palette.
auto random_coloring(const Graph & g, int palette, const Anchoring & kappa, Rng & rng) -> Coloring;

auto meets_quotas(const PartialEmbedding & e, const std::vector<Family> & families) -> bool;

// Colorful embedding of all of t respecting kappa and the quotas, or nothing.
// The palette must equal |V(t)|.
auto colorful_full_tree_dp(const Graph & g, const Tree & t, const Coloring & coloring, const Anchoring & kappa,
    const std::vector<Family> & families) -> std::optional<PartialEmbedding>;

// Deterministic backtracking for the same question. Throws BudgetExceeded
// once node_cap search nodes have been expanded (node_cap = 0: no cap).
auto exact_constrained_search(const Graph & g, const Tree & t, const Anchoring & kappa,
    const std::vector<Family> & families, std::uint64_t node_cap = 0) -> std::optional<PartialEmbedding>;

struct SearchResult {
    std::optional<PartialEmbedding> embedding;
    bool exact = false;    // when no embedding: absence is certain
    long long rounds = 0;
    std::uint64_t seed = 0;
    std::string reason;
};

// Picks exact search or colorful trials and returns a verified embedding of
// all of t meeting kappa and the quotas.
auto find_constrained_embedding(const Graph & g, const Tree & t, const Anchoring & kappa,
    const std::vector<Family> & families, const ColorCodingOptions & options, Rng & rng) -> SearchResult;

// Plain containment of a tree of bounded size. Exact answers come back as
// NotContained, exhausted randomized schedules as NotFound.
auto contains_tree_by_size(const Graph & g, const Tree & t, const ColorCodingOptions & options, Rng & rng) -> SolveOutcome;

struct AhscInstance {
    const Graph & g;
    const Tree & t;
    Anchoring kappa;
    std::vector<Family> families;
};

struct AhscSolution {
    VertexSet subtree;             // over V(T)
    PartialEmbedding embedding;    // over V(T), domain = subtree
};

struct AhscResult {
    std::optional<AhscSolution> solution;
    bool exact = false;    // when no solution: absence is certain
    NotFound not_found;
};

// Connected subtree of T containing the anchored vertices, embedded to respect
// kappa and meet every quota. Candidate subtrees are the minimal subtree over
// the anchors plus, at each of its vertices, a rooted subtree with a prescribed
// number of leaves hanging off it.
auto solve_ahsc(const AhscInstance & inst, const ColorCodingOptions & options, Rng & rng) -> AhscResult;

// One representative vertex set per rooted shape: subtrees of `region`
// rooted at `root` whose non-root leaves number exactly `leaves`.
auto rooted_subtree_candidates(const Tree & t, int root, const VertexSet & region, int leaves) -> std::vector<VertexSet>;

}
