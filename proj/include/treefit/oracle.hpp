#pragma once

#include <treefit/embedding.hpp>

#include <cstdint>

namespace treefit {

// Exact subgraph-isomorphism search for trees. Internal vertices of T are
// placed by backtracking with degree, free-neighbor and twin-class pruning;
// leaves are placed at the end by bipartite matching. Throws
// Error(BudgetExceeded) after `node_cap` search nodes (0 = unlimited).
auto brute_force_contains(const Graph & g, const Tree & t, std::uint64_t node_cap = 0) -> SolveOutcome;

}
