#pragma once

#include <treefit/graph.hpp>
#include <treefit/rng.hpp>
#include <treefit/tree.hpp>

namespace treefit {

auto cycle_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto petersen_graph() -> Graph;
// Disjoint union: b's vertices are shifted by a.order().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
auto with_extra_edges(const Graph & g, const std::vector<Edge> & extra) -> Graph;
// Cycle (or path, when closed is false) on `length` positions with each
// position replaced by a clique of `clique` vertices and consecutive cliques
// fully joined. Vertex j of position i is i·clique + j.
auto cycle_blowup(int length, int clique, bool closed = true) -> Graph;

auto path_tree(int n) -> Tree;
auto star_tree(int leaves) -> Tree;
// Center 0 with `legs` paths of `length` edges each.
auto spider_tree(int legs, int length) -> Tree;
// Spine path of `spine` vertices; spine vertex i gets legs[i] pendant leaves.
auto caterpillar_tree(const std::vector<int> & legs) -> Tree;

// Uniform labelled tree via a random Prüfer sequence.
auto random_tree(int n, Rng & rng) -> Tree;
// Random growth process keeping ld(T) ≤ cap (cap ≥ 1).
auto random_tree_leaf_capped(int n, int cap, Rng & rng) -> Tree;

auto random_gnp(int n, double p, Rng & rng) -> Graph;
// G(n,p) plus the edges of a uniform random spanning tree.
auto random_connected_gnp(int n, double p, Rng & rng) -> Graph;
// Random graph with minimum degree exactly `delta` (delta ≤ n−1): edges are
// added between deficient vertices until none is left.
auto random_min_degree_graph(int n, int delta, Rng & rng) -> Graph;

}
