#include "cha/setfam.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace cha {

int popcount(Mask m) { return std::popcount(m); }

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

Mask vertices_to_mask(const std::vector<int>& vs, int n) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
    m |= Mask{1} << v;
  }
  return m;
}

static void normalize_edges(std::vector<Mask>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Hypergraph Hypergraph::make(int n, std::vector<Mask> edges) {
  if (n < 0 || n > 31) throw InputError("vertex count out of range");
  normalize_edges(edges);
  for (Mask e : edges) {
    if (e & ~full_mask(n)) throw InputError("edge has out-of-range vertices");
    if (popcount(e) < 2) throw InputError("edge has fewer than two vertices");
  }
  return Hypergraph{n, std::move(edges)};
}

bool Hypergraph::has_edge_within(Mask subset) const {
  for (Mask e : edges)
    if ((e & ~subset) == 0) return true;
  return false;
}

Clutter Clutter::make(int n, std::vector<Mask> edges) {
  Hypergraph h = Hypergraph::make(n, std::move(edges));
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (size_t j = 0; j < h.edges.size(); ++j)
      if (i != j && (h.edges[i] & ~h.edges[j]) == 0)
        throw InputError("edges are not an antichain");
  return Clutter{h.n, std::move(h.edges)};
}

// Extracts bits of `m` lying in `subset` and compacts them onto
// [0, |subset|), preserving order.
static Mask compact_mask(Mask m, Mask subset) {
  Mask out = 0;
  int pos = 0;
  for (Mask bit = 1; bit <= subset && bit; bit <<= 1) {
    if (subset & bit) {
      if (m & bit) out |= Mask{1} << pos;
      ++pos;
    }
  }
  return out;
}

Hypergraph restrict(const Hypergraph& h, Mask subset) {
  if (subset & ~full_mask(h.n)) throw InputError("restriction set out of range");
  std::vector<Mask> kept;
  for (Mask e : h.edges)
    if ((e & ~subset) == 0) kept.push_back(compact_mask(e, subset));
  normalize_edges(kept);
  return Hypergraph{popcount(subset), std::move(kept)};
}

Clutter restrict(const Clutter& c, Mask subset) {
  Hypergraph r = restrict(c.hyper(), subset);
  return Clutter{r.n, std::move(r.edges)};  // antichain is preserved
}

Hypergraph disjoint_sum(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Mask> edges = a.edges;
  for (Mask e : b.edges) edges.push_back(e << a.n);
  normalize_edges(edges);
  return Hypergraph{a.n + b.n, std::move(edges)};
}

Clutter disjoint_sum(const Clutter& a, const Clutter& b) {
  Hypergraph s = disjoint_sum(a.hyper(), b.hyper());
  return Clutter{s.n, std::move(s.edges)};
}

Clutter minimal_edges(const Hypergraph& h) {
  std::vector<Mask> keep;
  for (Mask e : h.edges) {
    bool minimal = true;
    for (Mask f : h.edges)
      if (f != e && (f & ~e) == 0) { minimal = false; break; }
    if (minimal) keep.push_back(e);
  }
  normalize_edges(keep);
  return Clutter{h.n, std::move(keep)};
}

bool is_discrete(const Hypergraph& h) { return h.edges.empty(); }

bool is_building_set(const Hypergraph& h) {
  for (Mask e : h.edges)
    for (Mask f : h.edges) {
      if (e == f || (e & f) == 0) continue;
      if (!std::binary_search(h.edges.begin(), h.edges.end(), e | f)) return false;
    }
  return true;
}

Clutter delete_edge(const Clutter& c, Mask e) {
  auto it = std::find(c.edges.begin(), c.edges.end(), e);
  if (it == c.edges.end()) throw InputError("deleted edge not in clutter");
  std::vector<Mask> edges = c.edges;
  edges.erase(edges.begin() + (it - c.edges.begin()));
  return Clutter{c.n, std::move(edges)};
}

Clutter contract_edge(const Clutter& c, Mask e) {
  if (std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end())
    throw InputError("contracted edge not in clutter");
  Mask rest = full_mask(c.n) & ~e;
  int m = popcount(rest);
  Mask fresh = Mask{1} << m;  // the image of e, labeled last
  std::vector<Mask> images;
  for (Mask f : c.edges) {
    if (f == e) continue;
    Mask img = compact_mask(f & rest, rest);
    if (f & e) img |= fresh;
    assert(popcount(img) >= 2);
    images.push_back(img);
  }
  Hypergraph raw = Hypergraph::make(m + 1, std::move(images));
  return minimal_edges(raw);
}

std::vector<Mask> connected_components(const Hypergraph& h) {
  std::vector<int> parent(h.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Mask e : h.edges) {
    auto vs = mask_to_vertices(e);
    for (size_t i = 1; i < vs.size(); ++i) parent[find(vs[0])] = find(vs[i]);
  }
  std::map<int, Mask> comps;
  for (int v = 0; v < h.n; ++v) comps[find(v)] |= Mask{1} << v;
  std::vector<Mask> out;
  for (auto& [root, mask] : comps) out.push_back(mask);
  return out;  // map order = sorted by root = sorted by min element
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
  std::vector<Mask> edges;
  for (Mask e : h.edges) {
    Mask img = 0;
    for (int v : mask_to_vertices(e)) img |= Mask{1} << perm[v];
    edges.push_back(img);
  }
  normalize_edges(edges);
  return Hypergraph{h.n, std::move(edges)};
}

// ---------- canonical form ----------
//
// Per connected component: iterative color refinement splits vertices
// into isomorphism-invariant classes; a backtracking search over
// labelings restricted to the class order then minimizes the "profile"
// (per depth, the sorted list of edges completed by the chosen prefix).
// Transpositions that are automorphisms prune symmetric branches.

namespace {

struct ComponentCanon {
  int n;
  std::vector<Mask> edges;
  std::vector<int> color;       // refined color per vertex, 0-based class ids
  std::vector<int> order_pos;   // assigned new label per vertex, -1 if free
  std::vector<Mask> chosen;     // prefix as original-vertex mask per depth
  std::vector<std::vector<Mask>> best;     // best profile
  std::vector<std::vector<Mask>> current;  // profile along the current path
  bool have_best = false;

  explicit ComponentCanon(int n_, std::vector<Mask> edges_)
      : n(n_), edges(std::move(edges_)), color(n, 0), order_pos(n, -1) {}

  void refine_colors() {
    int classes = 1;
    for (int round = 0; round < n; ++round) {
      // signature: old color + sorted list over incident edges of
      // (size, sorted colors of the edge's vertices)
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v = 0; v < n; ++v) {
        std::vector<int> sig{color[v]};
        std::vector<std::vector<int>> inc;
        for (Mask e : edges) {
          if (!(e & (Mask{1} << v))) continue;
          std::vector<int> es{popcount(e)};
          for (int u : mask_to_vertices(e)) es.push_back(color[u]);
          std::sort(es.begin() + 1, es.end());
          inc.push_back(std::move(es));
        }
        std::sort(inc.begin(), inc.end());
        for (auto& s : inc) sig.insert(sig.end(), s.begin(), s.end()), sig.push_back(-1);
        groups[std::move(sig)].push_back(v);
      }
      if ((int)groups.size() == classes) break;
      classes = groups.size();
      int c = 0;
      for (auto& [sig, vs] : groups) {
        for (int v : vs) color[v] = c;
        ++c;
      }
    }
  }

  bool transposition_is_automorphism(int u, int w) const {
    for (Mask e : edges) {
      Mask bu = Mask{1} << u, bw = Mask{1} << w;
      Mask swapped = e & ~(bu | bw);
      if (e & bu) swapped |= bw;
      if (e & bw) swapped |= bu;
      if (!std::binary_search(edges.begin(), edges.end(), swapped)) return false;
    }
    return true;
  }

  // Relabeled image of edge e under the partial assignment (only valid
  // for fully assigned edges).
  Mask relabel_edge(Mask e) const {
    Mask out = 0;
    for (int v : mask_to_vertices(e)) out |= Mask{1} << order_pos[v];
    return out;
  }

  // Compares the current profile prefix against the same-length prefix
  // of the best profile; <0 strictly better, 0 tied, >0 prunable.
  int prefix_cmp() const {
    for (size_t i = 0; i < current.size(); ++i) {
      if (current[i] != best[i]) return current[i] < best[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int depth, Mask used) {
    if (depth == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    // Candidates: lowest free color class only (class order is fixed).
    int cmin = n + 1;
    for (int v = 0; v < n; ++v)
      if (order_pos[v] < 0) cmin = std::min(cmin, color[v]);
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (order_pos[v] >= 0 || color[v] != cmin) continue;
      bool symmetric = false;
      for (int u : tried)
        if (transposition_is_automorphism(u, v)) { symmetric = true; break; }
      if (symmetric) continue;
      tried.push_back(v);

      order_pos[v] = depth;
      Mask used2 = used | (Mask{1} << v);
      std::vector<Mask> completed;
      for (Mask e : edges)
        if ((e & ~used2) == 0 && (e & (Mask{1} << v))) completed.push_back(relabel_edge(e));
      std::sort(completed.begin(), completed.end());
      current.push_back(std::move(completed));

      if (!have_best || prefix_cmp() <= 0) search(depth + 1, used2);

      current.pop_back();
      order_pos[v] = -1;
    }
  }

  // Caller must pass sorted edges. Returns the canonical edge list.
  std::vector<Mask> run() {
    refine_colors();
    search(0, 0);
    std::vector<Mask> out;
    for (auto& level : best) out.insert(out.end(), level.begin(), level.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

CanonicalCode canonical_code(const Hypergraph& h) {
  if (h.n > kMaxVertices) throw BoundError("canonical form limited to n <= " + std::to_string(kMaxVertices));
  // Canonicalize each connected component separately, then lay the
  // components out in sorted order of their codes.
  std::vector<std::pair<int, std::vector<Mask>>> parts;  // (size, edges)
  for (Mask comp : connected_components(h)) {
    Hypergraph sub = restrict(h, comp);
    ComponentCanon canon(sub.n, sub.edges);
    parts.emplace_back(sub.n, canon.run());
  }
  std::sort(parts.begin(), parts.end());
  CanonicalCode code{h.n, {}};
  int offset = 0;
  for (auto& [size, edges] : parts) {
    for (Mask e : edges) code.edges.push_back(e << offset);
    offset += size;
  }
  std::sort(code.edges.begin(), code.edges.end());
  return code;
}

CanonicalCode canonical_code(const Clutter& c) { return canonical_code(c.hyper()); }

std::string CanonicalCode::to_string() const {
  std::ostringstream os;
  os << "H" << n << "{";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ",";
    os << "{";
    auto vs = mask_to_vertices(edges[i]);
    for (size_t j = 0; j < vs.size(); ++j) {
      if (j) os << " ";
      os << vs[j];
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

}  // namespace cha
