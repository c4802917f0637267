#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cha/setfam.hpp"

// Shared helpers for the test suites. Oracles here are deliberately
// naive enumerations, independent of the library's DP implementations.

namespace testutil {

inline cha::Hypergraph H(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<cha::Mask> masks;
  for (auto& e : edges) masks.push_back(cha::vertices_to_mask(e, n));
  return cha::Hypergraph::make(n, std::move(masks));
}

inline cha::Clutter C(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<cha::Mask> masks;
  for (auto& e : edges) masks.push_back(cha::vertices_to_mask(e, n));
  return cha::Clutter::make(n, std::move(masks));
}

// 1-based variants, matching instances quoted with vertices 1..n.
inline cha::Clutter C1based(int n, std::vector<std::vector<int>> edges) {
  for (auto& e : edges)
    for (auto& v : e) --v;
  return C(n, edges);
}

inline cha::Hypergraph random_hypergraph(std::mt19937& rng, int n, double edge_prob = 0.3) {
  std::vector<cha::Mask> edges;
  std::bernoulli_distribution coin(edge_prob);
  for (cha::Mask e = 0; e < (cha::Mask{1} << n); ++e)
    if (cha::popcount(e) >= 2 && coin(rng)) edges.push_back(e);
  return cha::Hypergraph::make(n, std::move(edges));
}

inline cha::Clutter random_clutter(std::mt19937& rng, int n, double edge_prob = 0.3) {
  return cha::minimal_edges(random_hypergraph(rng, n, edge_prob));
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Number of ordered decompositions of the vertex set into blocks of
// sizes alpha with every block discrete, by direct enumeration of all
// k^n block assignments.
inline long long zeta_alpha_oracle(const cha::Hypergraph& h, const std::vector<int>& alpha) {
  const int k = alpha.size();
  if (h.n == 0) return 1;
  if (k == 0) return 0;
  long long count = 0;
  std::vector<int> assign(h.n, 0);
  while (true) {
    std::vector<cha::Mask> blocks(k, 0);
    for (int v = 0; v < h.n; ++v) blocks[assign[v]] |= cha::Mask{1} << v;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      ok = cha::popcount(blocks[j]) == alpha[j] && restrict(h, blocks[j]).is_discrete();
    if (ok) ++count;
    int i = 0;
    while (i < h.n && assign[i] == k - 1) assign[i++] = 0;
    if (i == h.n) break;
    ++assign[i];
  }
  return count;
}

// Proper colorings with at most m colors, by enumerating all m^n maps.
inline long long coloring_count_oracle(const cha::Hypergraph& h, int m) {
  if (h.n == 0) return 1;
  if (m == 0) return 0;
  long long count = 0;
  std::vector<int> color(h.n, 0);
  while (true) {
    bool proper = true;
    for (cha::Mask e : h.edges) {
      auto vs = cha::mask_to_vertices(e);
      bool mono = true;
      for (std::size_t i = 1; i < vs.size() && mono; ++i) mono = color[vs[i]] == color[vs[0]];
      if (mono) { proper = false; break; }
    }
    if (proper) ++count;
    int i = 0;
    while (i < h.n && color[i] == m - 1) color[i++] = 0;
    if (i == h.n) break;
    ++color[i];
  }
  return count;
}

}  // namespace testutil
