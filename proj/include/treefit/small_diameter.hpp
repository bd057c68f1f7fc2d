#pragma once

#include <treefit/color_coding.hpp>
#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/rng.hpp>
#include <treefit/tree.hpp>

#include <functional>
#include <vector>

namespace treefit {

// Guessed shape of an embedding σ′ of T − L relative to the anchor images
// u_1..u_{k−1}.
struct MultiLeafParams {
    std::vector<int> a;    // a_i = min{|Im σ′ ∖ N[u_i]|, ndef(u_i)}
    VertexSet b;           // anchors with a_i < ndef(u_i)
    VertexSet x;           // Im σ′ ∩ N(B), minus B and the common neighbors of B
    int a_b = 0;           // |Im σ′ ∖ N[B]|
};

auto multi_leaf_params_of(const Graph & g, const std::vector<int> & anchors, const VertexSet & image, int k) -> MultiLeafParams;

// Calls f on every combination the leaf-anchor search tries until f returns
// true; returns whether it did.
auto for_each_multi_leaf_params(const Graph & g, const std::vector<int> & anchors, int k,
    const std::function<bool(const MultiLeafParams &)> & f) -> bool;

// Embedding of T respecting kappa, where kappa maps k−1 distinct
// leaf-adjacent vertices. A miss is reported as NotFound whose reason is
// "no anchored extension" when every search was exact.
auto solve_with_leaf_anchor(const Graph & g, const Tree & t, const Anchoring & kappa, int k, const ColorCodingOptions & options,
    Rng & rng) -> SolveOutcome;

struct WCandidates {
    int root = -1;
    VertexSet w_set;                                  // over V(T)
    std::vector<std::vector<int>> classes;           // children of the root by subtree shape
    std::vector<std::vector<int>> representatives;   // first k−1 of each class
};

// Throws TreeIsSeparable when T is k^p-separable.
auto build_w_candidates(const Tree & t, int k, int p) -> WCandidates;
// Same construction around the centroid without the separability check.
auto w_candidates_around_centroid(const Tree & t, int k) -> WCandidates;

struct SmallDiameterConfig {
    bool strict = true;    // strict: the four hypotheses are checked literally
    int failure_exponent = 20;
    ColorCodingOptions color;
};

// Rounds of: for every u, a random (k−1)-subset U of N(u) and every injection
// of U into the candidate set as anchoring. 2k^{p+2}·failure_exponent rounds.
auto solve_small_diameter(const Graph & g, const Tree & t, int k, int p, const SmallDiameterConfig & config, Rng & rng)
    -> SolveOutcome;

}
