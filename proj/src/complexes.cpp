#include "cha/complexes.hpp"

#include <algorithm>
#include <numeric>

#include "cha/checked.hpp"
#include "cha/subsetdp.hpp"

namespace cha {

SimplicialComplex make_complex_from_maximal(int n, std::vector<Mask> maximal) {
  // drop implicit singletons, validate the antichain
  std::vector<Mask> facets;
  for (Mask f : maximal)
    if (popcount(f) >= 2) facets.push_back(f);
  Clutter c = Clutter::make(n, std::move(facets));
  return SimplicialComplex{c.n, std::move(c.edges)};
}

SimplicialComplex SimplicialComplex::make(int n, std::vector<Mask> facets) {
  Clutter c = Clutter::make(n, std::move(facets));
  return SimplicialComplex{c.n, std::move(c.edges)};
}

bool SimplicialComplex::is_face(Mask sigma) const {
  if (popcount(sigma) <= 1) return (sigma & ~full_mask(n)) == 0;
  for (Mask f : facets)
    if ((sigma & ~f) == 0) return true;
  return false;
}

bool SimplicialComplex::is_simplex() const { return is_face(full_mask(n)); }

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g{n, std::vector<Mask>(n, 0)};
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw InputError("bad graph edge");
    g.adj[u] |= Mask{1} << v;
    g.adj[v] |= Mask{1} << u;
  }
  return g;
}

std::vector<Mask> nerve_vertex_order(const Clutter& c) {
  std::vector<Mask> order = c.edges;
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return mask_to_vertices(a) < mask_to_vertices(b);
  });
  return order;
}

SimplicialComplex nerve(const Clutter& c) {
  const int m = c.edges.size();
  if (m > kMaxPowersumEdges) throw BoundError("nerve limited to " + std::to_string(kMaxPowersumEdges) + " edges");
  auto order = nerve_vertex_order(c);
  auto common = [&](Mask pick) {
    Mask inter = full_mask(c.n);
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) inter &= order[i];
    return inter;
  };
  std::vector<Mask> facets;
  for (Mask pick = 1; pick < (Mask{1} << m); ++pick) {
    if (common(pick) == 0) continue;
    bool maximal = true;
    for (int i = 0; i < m && maximal; ++i)
      if (!((pick >> i) & 1) && common(pick | (Mask{1} << i)) != 0) maximal = false;
    if (maximal) facets.push_back(pick);
  }
  return make_complex_from_maximal(m, std::move(facets));
}

Graph intersection_graph(const Clutter& c) {
  auto order = nerve_vertex_order(c);
  const int m = order.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (order[i] & order[j]) edges.emplace_back(i, j);
  return Graph::make(m, edges);
}

// Brute-force search for an induced cycle of length >= 4, smallest
// vertex mask first (by size, then numerically).
static std::optional<Mask> find_chordless_cycle(const Graph& g) {
  std::vector<Mask> candidates;
  for (Mask sub = 0; sub < (Mask{1} << g.n); ++sub)
    if (popcount(sub) >= 4) candidates.push_back(sub);
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  for (Mask sub : candidates) {
    bool cycle = true;
    for (int v : mask_to_vertices(sub))
      if (popcount(g.adj[v] & sub) != 2) { cycle = false; break; }
    if (!cycle) continue;
    // connectivity of the induced 2-regular graph
    auto vs = mask_to_vertices(sub);
    Mask seen = Mask{1} << vs[0];
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : mask_to_vertices(g.adj[v] & sub & ~seen)) {
        seen |= Mask{1} << u;
        stack.push_back(u);
      }
    }
    if (seen == sub) return sub;
  }
  return std::nullopt;
}

ChordalityResult is_chordal(const Graph& g) {
  // maximum cardinality search
  std::vector<int> weight(g.n, 0), order;
  std::vector<char> numbered(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    numbered[best] = 1;
    order.push_back(best);
    for (int u : mask_to_vertices(g.adj[best]))
      if (!numbered[u]) ++weight[u];
  }
  // reverse order is a perfect elimination ordering iff chordal
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    Mask later = 0;
    for (int u : mask_to_vertices(g.adj[v]))
      if (pos[u] > i) later |= Mask{1} << u;
    for (int u : mask_to_vertices(later))
      if ((later & ~(g.adj[u] | (Mask{1} << u))) != 0)
        return ChordalityResult{false, find_chordless_cycle(g)};
  }
  return ChordalityResult{true, std::nullopt};
}

FlagResult is_flag(const SimplicialComplex& k) {
  if (k.n > kMaxPowersumEdges) throw BoundError("flag test bound exceeded");
  for (int size = 3; size <= k.n; ++size)
    for (Mask sub = 0; sub < (Mask{1} << k.n); ++sub) {
      if (popcount(sub) != size || k.is_face(sub)) continue;
      bool minimal = true;
      for (int v : mask_to_vertices(sub))
        if (!k.is_face(sub & ~(Mask{1} << v))) { minimal = false; break; }
      if (minimal) return FlagResult{false, sub};
    }
  return FlagResult{true, std::nullopt};
}

SimplicialComplex independence_complex(const Clutter& c) {
  auto ind = independence_table(c.hyper());
  std::vector<Mask> facets;
  for (Mask sub = 0; sub < (Mask{1} << c.n); ++sub) {
    if (!ind[sub]) continue;
    bool maximal = true;
    for (int v = 0; v < c.n && maximal; ++v)
      if (!((sub >> v) & 1) && ind[sub | (Mask{1} << v)]) maximal = false;
    if (maximal) facets.push_back(sub);
  }
  return make_complex_from_maximal(c.n, std::move(facets));
}

std::vector<char> face_table(const SimplicialComplex& k) {
  if (k.n > kMaxVertices) throw BoundError("face table limited to n <= " + std::to_string(kMaxVertices));
  const std::size_t size = std::size_t{1} << k.n;
  std::vector<char> face(size, 0);
  for (Mask f : k.facets) face[f] = 1;
  // downward closure
  for (int b = k.n - 1; b >= 0; --b)
    for (std::size_t mask = size; mask-- > 0;)
      if ((mask >> b) & 1) face[mask ^ (std::size_t{1} << b)] |= face[mask];
  face[0] = 1;
  for (int v = 0; v < k.n; ++v) face[std::size_t{1} << v] = 1;
  return face;
}

Clutter minimal_nonfaces(const SimplicialComplex& k) {
  auto face = face_table(k);
  std::vector<Mask> out;
  for (Mask sub = 0; sub < (Mask{1} << k.n); ++sub) {
    if (face[sub]) continue;
    bool minimal = true;
    for (int v : mask_to_vertices(sub))
      if (!face[sub & ~(Mask{1} << v)]) { minimal = false; break; }
    if (minimal) out.push_back(sub);
  }
  return Clutter::make(k.n, std::move(out));
}

std::int64_t zeta_complex_alpha(const SimplicialComplex& k, const std::vector<int>& alpha) {
  std::int64_t sum = 0;
  for (int a : alpha) {
    if (a < 1) throw InputError("composition parts must be positive");
    sum += a;
  }
  if (sum != k.n) throw InputError("composition does not sum to the vertex count");
  if (k.n == 0) return 1;
  return sized_decomposition_count(face_table(k), k.n, alpha);
}

IntPolynomial partition_polynomial(const SimplicialComplex& k) {
  auto counts = k.n == 0 ? std::vector<std::int64_t>{1}
                         : block_counts(face_table(k), k.n);
  return counts_to_polynomial(counts, k.n);
}

std::int64_t euler_char_complex(const SimplicialComplex& k) {
  auto face = face_table(k);
  const Mask full = full_mask(k.n);
  std::int64_t acc = 0;
  for (Mask sub = 0;; sub = (sub - full) & full) {
    if (face[sub] && face[full & ~sub]) acc += popcount(sub) % 2 ? -1 : 1;
    if (sub == full) break;
  }
  return acc;
}

SimplicialComplex restrict(const SimplicialComplex& k, Mask subset) {
  if (subset & ~full_mask(k.n)) throw InputError("restriction set out of range");
  std::vector<Mask> cut;
  for (Mask f : k.facets) cut.push_back(f & subset);
  std::vector<Mask> maximal;
  for (Mask f : cut) {
    bool max = true;
    for (Mask g : cut)
      if (g != f && (f & ~g) == 0) { max = false; break; }
    if (max && !std::count(maximal.begin(), maximal.end(), f)) maximal.push_back(f);
  }
  std::vector<Mask> compacted;
  for (Mask f : maximal) {
    Mask img = 0;
    int pos = 0;
    for (int v = 0; v < k.n; ++v) {
      if (!((subset >> v) & 1)) continue;
      if ((f >> v) & 1) img |= Mask{1} << pos;
      ++pos;
    }
    compacted.push_back(img);
  }
  return make_complex_from_maximal(popcount(subset), std::move(compacted));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto effective = [](const SimplicialComplex& k) {
    std::vector<Mask> out = k.facets;
    Mask covered = 0;
    for (Mask f : out) covered |= f;
    for (int v = 0; v < k.n; ++v)
      if (!((covered >> v) & 1)) out.push_back(Mask{1} << v);
    if (out.empty()) out.push_back(0);  // the empty face of K_empty
    return out;
  };
  std::vector<Mask> facets;
  for (Mask fa : effective(a))
    for (Mask fb : effective(b)) facets.push_back(fa | (fb << a.n));
  return make_complex_from_maximal(a.n + b.n, std::move(facets));
}

std::int64_t zinv_complex(const SimplicialComplex& k) {
  if (k.n == 0) return 1;
  auto counts = block_counts(face_table(k), k.n);
  std::int64_t acc = 0;
  for (int j = 0; j <= k.n; ++j) acc = checked_add(acc, (j % 2 ? -1 : 1) * counts[j]);
  return acc;
}

EulerianComplexResult is_eulerian_complex(const SimplicialComplex& k) {
  auto face = face_table(k);
  auto zinv = zinv_table(face, k.n);
  for (Mask sub = 1; sub < (Mask{1} << k.n); ++sub)
    if (!face[sub] && zinv[sub] != 0) return EulerianComplexResult{false, sub};
  return EulerianComplexResult{true, std::nullopt};
}

SimplicialComplex full_simplex(int n) {
  std::vector<Mask> facets;
  if (n >= 2) facets.push_back(full_mask(n));
  return SimplicialComplex::make(n, std::move(facets));
}

SimplicialComplex boundary_simplex(int n) {
  std::vector<Mask> facets;
  if (n >= 3)
    for (int v = 0; v < n; ++v) facets.push_back(full_mask(n) & ~(Mask{1} << v));
  return SimplicialComplex::make(n, std::move(facets));
}

}  // namespace cha
