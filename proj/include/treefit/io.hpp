#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/tree.hpp>

#include <filesystem>
#include <iosfwd>

namespace treefit {

// Graph: `n m`, then m lines `u v` with 0 ≤ u < v < n.
// Tree: `n`, then n−1 lines `u v`.
// Certificate: `t g` per mapped pair, sorted by t.
// Readers throw Error(Parse) with a 1-based line number in the message.
// Blank lines and lines starting with '#' are skipped.

auto read_graph(std::istream & in) -> Graph;
void write_graph(std::ostream & out, const Graph & g);

auto read_tree(std::istream & in) -> Tree;
void write_tree(std::ostream & out, const Tree & t);

auto read_certificate(std::istream & in, int tree_order, int graph_order) -> PartialEmbedding;
void write_certificate(std::ostream & out, const PartialEmbedding & e);

auto load_graph(const std::filesystem::path & p) -> Graph;
auto load_tree(const std::filesystem::path & p) -> Tree;
auto load_certificate(const std::filesystem::path & p, int tree_order, int graph_order) -> PartialEmbedding;
void save_graph(const std::filesystem::path & p, const Graph & g);
void save_tree(const std::filesystem::path & p, const Tree & t);
void save_certificate(const std::filesystem::path & p, const PartialEmbedding & e);

}
