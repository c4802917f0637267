#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cha/setfam.hpp"
#include "cha/symfun.hpp"

// Simplicial complexes stored by their facet clutter: nerves,
// intersection graphs, chordality, flag tests, independence complexes
// and partition polynomials.

namespace cha {

// A complex on [0, n): facets of size >= 2 form an antichain; every
// singleton is implicitly a face.
struct SimplicialComplex {
  int n = 0;
  std::vector<Mask> facets;  // sorted, antichain, sizes >= 2

  static SimplicialComplex make(int n, std::vector<Mask> facets);

  bool is_face(Mask sigma) const;
  bool is_simplex() const;  // the full vertex set is a face
  bool operator==(const SimplicialComplex&) const = default;
};

// Simple undirected graph on [0, n).
struct Graph {
  int n = 0;
  std::vector<Mask> adj;  // adjacency masks

  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
};

// Nerve N(C): vertices are the edges of C in (size, lex) order; faces
// are edge subsets with nonempty common intersection.
SimplicialComplex nerve(const Clutter& c);

// 1-skeleton of the nerve.
Graph intersection_graph(const Clutter& c);

// Edges of C in the nerve's vertex order.
std::vector<Mask> nerve_vertex_order(const Clutter& c);

// Perfect-elimination test via maximum cardinality search. On failure
// the witness is the lexicographically smallest chordless cycle of
// length >= 4 (as a vertex mask).
struct ChordalityResult {
  bool chordal = true;
  std::optional<Mask> chordless_cycle;
};
ChordalityResult is_chordal(const Graph& g);

// True iff every minimal nonface has exactly two elements; witness is a
// minimal nonface of size >= 3.
struct FlagResult {
  bool flag = true;
  std::optional<Mask> nonface;
};
FlagResult is_flag(const SimplicialComplex& k);

// Ind(C): faces are the subsets inducing no edge of C.
SimplicialComplex independence_complex(const Clutter& c);

// The clutter of inclusion-minimal nonfaces; inverse to Ind.
Clutter minimal_nonfaces(const SimplicialComplex& k);

// table[mask] = 1 iff mask is a face of K.
std::vector<char> face_table(const SimplicialComplex& k);

// Number of ordered decompositions of [0, n) into faces of sizes alpha.
std::int64_t zeta_complex_alpha(const SimplicialComplex& k, const std::vector<int>& alpha);

// Counts partition functions V -> [m]: every color class is a face.
IntPolynomial partition_polynomial(const SimplicialComplex& k);

// Euler character: sum over (I, I^c) with both restrictions simplices
// of (-1)^|I|.
std::int64_t euler_char_complex(const SimplicialComplex& k);

// Restriction K|_I, relabeled onto [0, |I|).
SimplicialComplex restrict(const SimplicialComplex& k, Mask subset);

// Join K1 * K2.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Mobius character of the complex CHA: alternating decomposition count
// with face blocks.
std::int64_t zinv_complex(const SimplicialComplex& k);

struct EulerianComplexResult {
  bool eulerian = true;
  std::optional<Mask> witness;  // restriction violating the definition
};

// K is eulerian iff every restriction is a simplex or has vanishing
// Mobius character; computed directly on the subset lattice.
EulerianComplexResult is_eulerian_complex(const SimplicialComplex& k);

// Full simplex on n vertices.
SimplicialComplex full_simplex(int n);
// Boundary of the simplex on n vertices.
SimplicialComplex boundary_simplex(int n);

}  // namespace cha
