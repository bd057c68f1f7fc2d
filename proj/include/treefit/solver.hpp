#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/tree.hpp>

#include <cstdint>
#include <string>

namespace treefit {

enum class SolveMode {
    Strict,      // exact searches and trial schedules run to completion
    Budgeted,    // capped; NotFound("BudgetExceeded") when a cap is hit
};

struct SolveConfig {
    std::uint64_t seed = 0;
    int failure_exponent = 20;
    SolveMode mode = SolveMode::Strict;
    std::uint64_t node_cap = 0;      // exact search budget; 0: unlimited, or the budgeted default
    long long max_trials = 0;        // color-coding trial cap; 0: full schedule, or the budgeted default
    bool relaxed = false;            // desk-scale ladder thresholds instead of the literal ones
    bool force_randomized = false;   // color coding even where exhaustive search is cheaper
};

inline constexpr std::uint64_t budgeted_node_cap = 20'000'000;
inline constexpr long long budgeted_max_trials = 20'000;

enum class LadderCase {
    Chvatal,           // |V(T)| ≤ δ+1
    Size,              // |V(T)| > |V(G)|
    DeltaPlusTwo,      // |V(T)| = δ+2, exact characterization
    SmallDelta,        // δ < k^(3p+1)
    HighLeafDegree,    // ld(T) ≥ k−1
    Dense,             // n ≤ (1+1/(4k))δ
    LargeDiameter,     // diam(T) ≥ 8k⁶·log δ
    Medium,            // k^p-escape vertex or k^p-separable T
    SmallDiameter,
};

auto ladder_case_name(LadderCase c) -> std::string;

struct LadderThresholds {
    int p = 15;
    long long small_delta = 0;       // case 1 when δ below this
    long long large_diameter = 0;    // case 5 when diam(T) at least this
    long long escape_q = 0;
    long long separable_q = 0;

    // k^(3p+1), ⌈8k⁶·log₂ δ⌉, k^p, k^p with p = 15.
    static auto literal(int k, int delta) -> LadderThresholds;
    // p = 1: 3k, 4k, k², k².
    static auto relaxed(int k) -> LadderThresholds;
};

// Case taken on a connected G with k = |V(T)|−δ(G); the order of the checks
// is the order of LadderCase.
auto classify(const Graph & g, const Tree & t, bool relaxed) -> LadderCase;

struct SolveTrace {
    std::vector<LadderCase> cases;    // one per component that was large enough
};

// Solves every component that can hold T in ascending order of its lowest
// vertex and stops at the first Contains. Every Contains is verified against
// the input. Never throws Error; InternalError means a broken invariant.
auto solve(const Graph & g, const Tree & t, const SolveConfig & config = {}, SolveTrace * trace = nullptr) -> SolveOutcome;

}
