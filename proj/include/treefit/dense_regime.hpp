#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/tree.hpp>

#include <optional>
#include <vector>

namespace treefit {

// max{⌈(n − 3ℓ + 6)/2⌉, 0}: no hitting set of {N_T(v)} is smaller.
auto hitting_set_lower_bound(const Tree & t) -> int;

// Leaves of T removed one at a time, each keeping the maximum leaf-degree
// from growing, until `stop_size` vertices remain.
auto dense_removal_order(const Tree & t, int stop_size) -> std::vector<int>;

struct DenseTrace {
    int free_steps = 0;      // leaf placed on a free neighbor
    int leaf_swaps = 0;      // leaf image moved through a common neighbor
    int relocations = 0;     // inner vertex moved to an outside vertex
};

// Embedding of T with ld(T) < k when δ(G)+k ≤ |V(G)| ≤ (1+1/(4k))δ(G),
// δ(G) ≥ 12k² and |V(T)| ≤ δ(G)+k. Throws PreconditionViolated; panics if a
// step that cannot fail does.
auto embed_dense(const Graph & g, const Tree & t, int k, DenseTrace * trace = nullptr) -> PartialEmbedding;

// The same induction without the hypotheses; when the preferred rewiring
// step fails the other one is tried. Nothing when both get stuck.
auto try_embed_dense(const Graph & g, const Tree & t, DenseTrace * trace = nullptr) -> std::optional<PartialEmbedding>;

}
