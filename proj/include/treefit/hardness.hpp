#pragma once

#include <treefit/embedding.hpp>
#include <treefit/graph.hpp>
#include <treefit/rng.hpp>
#include <treefit/tree.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace treefit {

struct ThreePartitionInstance {
    int n = 0;                 // number of triples
    std::vector<int> sizes;    // 3n positive sizes
    int B = 0;                 // target sum per triple
};

// Throws InvalidThreePartition unless |sizes| = 3n, Σ sizes = nB and every
// size is positive. The bounds B/4 < s < B/2 are checked unless `loose`.
void validate(const ThreePartitionInstance & inst, bool loose = false);

// `n B` on the first line, the 3n sizes on the second.
auto read_three_partition(std::istream & in) -> ThreePartitionInstance;
void write_three_partition(std::ostream & out, const ThreePartitionInstance & inst);

using Triple = std::array<int, 3>;    // indices into sizes

// Exhaustive; for the small instances used in audits.
auto find_three_partition(const ThreePartitionInstance & inst) -> std::optional<std::vector<Triple>>;

// A valid instance built from n triples that each sum to B, shuffled. When
// `perturb` is set, one unit moves between two sizes where the bounds allow,
// which usually destroys the partition.
auto random_three_partition(int n, int B, bool perturb, Rng & rng) -> ThreePartitionInstance;

struct Rational {
    long long num = 1;
    long long den = 1;
};

// "p/q", an integer or a decimal such as "0.125".
auto parse_rational(const std::string & text) -> Rational;

struct PendantClique {
    int w = 0;         // attachment vertex in some L_i
    int copy = 0;      // 0 ≤ copy < δ−B−2
    int first = 0;     // lowest vertex of the clique, the one adjacent to w
    int size = 0;      // δ+1
};

// All indices are 0-based; groups i < n, slots h < 3, sizes a < m = 3n.
struct ReductionOutput {
    ThreePartitionInstance instance;
    Rational epsilon;
    int delta = 0;
    int Delta = 0;
    long long ell = 0;
    Graph g;
    Tree t;

    // tree: r, v_a, R_a, u_j
    int r = 0;
    std::vector<int> v;
    std::vector<std::vector<int>> R;
    std::vector<int> u;

    // graph: L_i with y_i^(h) its first three vertices, W cliques, x, z_j, Z_i^(h)
    std::vector<std::vector<int>> L;
    std::vector<std::array<int, 3>> y;
    std::vector<PendantClique> W;
    int x = 0;
    std::vector<int> z;
    std::vector<std::array<std::vector<int>, 3>> Z;
};

// δ = max{⌈(ℓ+3)/ε⌉, 3ℓ+6n−2}, Δ = δ+2. Every invariant of audit() is
// checked before returning. `loose` skips the B/4 < s < B/2 bounds.
auto generate_hardness_instance(const ThreePartitionInstance & inst, Rational epsilon, bool loose = false)
    -> ReductionOutput;

// Violated invariants, empty when all hold.
auto audit(const ReductionOutput & out) -> std::vector<std::string>;

// r ↦ x, u_j ↦ z_j, the h-th triple onto y_h^(1..3), its R sets into
// L_h ∖ {y}. Throws InvalidPartition unless the triples partition the sizes
// into sums of B.
auto forward_certificate(const ReductionOutput & out, const std::vector<Triple> & partition) -> PartialEmbedding;

// One JSON object per vertex of T and of G: {"side", "vertex", "role", ...}.
void write_landmarks(std::ostream & out, const ReductionOutput & red);

}
