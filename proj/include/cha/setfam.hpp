#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core set-family combinatorics: hypergraphs, clutters, restrictions,
// disjoint sums, deletion-contraction and canonical forms under
// isomorphism. Vertex sets are encoded as bitmasks over [0, n).

namespace cha {

using Mask = std::uint32_t;

// Hard limits for the exact exponential algorithms. Exceeding one of
// these raises BoundError; nothing is ever truncated silently.
inline constexpr int kMaxVertices = 12;       // canonical form, subset DP
inline constexpr int kMaxAntipodeVertices = 8;
inline constexpr int kMaxPsiVertices = 10;
inline constexpr int kMaxPowersumEdges = 20;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int popcount(Mask m);
Mask full_mask(int n);

// Bits of `m` listed ascending.
std::vector<int> mask_to_vertices(Mask m);
Mask vertices_to_mask(const std::vector<int>& vs, int n);

// A hypergraph on vertex set [0, n). Edges are bitmasks, kept sorted
// ascending and distinct; every edge has at least two vertices.
struct Hypergraph {
  int n = 0;
  std::vector<Mask> edges;

  // Validates and normalizes (sorts, dedupes). Throws InputError on a
  // bad edge (size < 2 or out of range).
  static Hypergraph make(int n, std::vector<Mask> edges);

  bool operator==(const Hypergraph&) const = default;
  auto operator<=>(const Hypergraph&) const = default;

  bool is_discrete() const { return edges.empty(); }
  bool has_edge_within(Mask subset) const;
};

// A hypergraph whose edges form an antichain.
struct Clutter {
  int n = 0;
  std::vector<Mask> edges;

  // Throws InputError if some edge contains another.
  static Clutter make(int n, std::vector<Mask> edges);

  bool operator==(const Clutter&) const = default;
  auto operator<=>(const Clutter&) const = default;

  Hypergraph hyper() const { return Hypergraph{n, edges}; }
};

// Order-comparable, hashable encoding of an isomorphism class: the
// vertex count plus the lexicographically minimal relabeled edge list.
struct CanonicalCode {
  int n = 0;
  std::vector<Mask> edges;

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

  std::string to_string() const;
};

// H|_I relabeled onto [0, |I|) by the order-preserving bijection.
Hypergraph restrict(const Hypergraph& h, Mask subset);
Clutter restrict(const Clutter& c, Mask subset);

Hypergraph disjoint_sum(const Hypergraph& a, const Hypergraph& b);
Clutter disjoint_sum(const Clutter& a, const Clutter& b);

// The clutter of inclusion-minimal edges of H (the projection p).
Clutter minimal_edges(const Hypergraph& h);

bool is_discrete(const Hypergraph& h);

// True iff any two intersecting edges have their union in H.
bool is_building_set(const Hypergraph& h);

// C - e. Throws InputError if e is not an edge.
Clutter delete_edge(const Clutter& c, Mask e);

// C/e: e is collapsed to one fresh vertex; edges meeting e are rerouted
// through it, the result is relabeled to [0, n-|e|+1), minimalized and
// deduplicated. Throws InputError if e is not an edge.
Clutter contract_edge(const Clutter& c, Mask e);

// Components of the hyperedge-connectivity relation, isolated vertices
// as singletons, sorted by minimum element.
std::vector<Mask> connected_components(const Hypergraph& h);

// Canonical form under vertex relabeling: equal codes iff isomorphic.
// Exhaustive backtracking with color refinement and symmetry pruning;
// throws BoundError for n > kMaxVertices.
CanonicalCode canonical_code(const Hypergraph& h);
CanonicalCode canonical_code(const Clutter& c);

// Relabels H by the permutation perm (vertex v becomes perm[v]).
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace cha
