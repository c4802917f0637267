#include "cha/euler.hpp"

#include <algorithm>

#include "cha/checked.hpp"
#include "cha/subsetdp.hpp"

namespace cha {

EulerianResult is_eulerian(const Hypergraph& h) {
  if (h.n == 0) return EulerianResult{true, std::nullopt};
  auto ind = independence_table(h);
  auto zinv = zinv_table(ind, h.n);
  for (Mask sub = 1; sub < (Mask{1} << h.n); ++sub)
    if (!ind[sub] && zinv[sub] != 0) return EulerianResult{false, sub};
  return EulerianResult{true, std::nullopt};
}

ZetaCache::ZetaCache(const Hypergraph& h) : n_(h.n) {
  if (n_ > 0) ind_ = independence_table(h);
}

std::int64_t ZetaCache::operator()(const Composition& alpha) {
  int sum = 0;
  for (int a : alpha) sum += a;
  if (sum != n_) throw InputError("composition does not sum to the vertex count");
  if (n_ == 0) return 1;
  Partition key = sorted_partition(alpha);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::int64_t val = sized_decomposition_count(ind_, n_, key);
  cache_.emplace(std::move(key), val);
  return val;
}

Relation5Result check_relation5(const Hypergraph& h) {
  ZetaCache zeta(h);
  for (const Composition& alpha : compositions_of(h.n)) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j <= alpha[i]; ++j) {
        Composition beta;
        beta.reserve(alpha.size() + 1);
        beta.insert(beta.end(), alpha.begin(), alpha.begin() + i);
        if (j > 0) beta.push_back(j);
        if (alpha[i] - j > 0) beta.push_back(alpha[i] - j);
        beta.insert(beta.end(), alpha.begin() + i + 1, alpha.end());
        acc = checked_add(acc, (j % 2 ? -1 : 1) * zeta(beta));
      }
      if (acc != 0) return Relation5Result{false, std::make_pair(alpha, (int)i)};
    }
  }
  return Relation5Result{true, std::nullopt};
}

OddSubalgebraResult in_odd_subalgebra(const Hypergraph& h) {
  if (h.n == 0) return OddSubalgebraResult{true, std::nullopt};
  auto ind = independence_table(h);
  auto zinv = zinv_table(ind, h.n);
  const Mask full = full_mask(h.n);

  // codes of all restrictions, computed once per mask
  std::vector<CanonicalCode> code(std::size_t{1} << h.n);
  for (Mask sub = 0;; sub = (sub - full) & full) {
    code[sub] = canonical_code(restrict(h, sub));
    if (sub == full) break;
  }

  std::map<std::pair<CanonicalCode, CanonicalCode>, std::int64_t> collected;
  for (Mask j = 0;; j = (j - full) & full) {
    std::int64_t zbar = ind[j] ? (popcount(j) % 2 ? -1 : 1) : 0;
    std::int64_t t = zbar - zinv[j];
    if (t != 0) {
      Mask rest = full & ~j;
      Mask i = 0;
      do {
        auto key = std::make_pair(code[i], code[rest & ~i]);
        auto [it, inserted] = collected.try_emplace(key, t);
        if (!inserted) {
          it->second = checked_add(it->second, t);
          if (it->second == 0) collected.erase(it);
        }
        i = (i - rest) & rest;
      } while (i != 0);
    }
    if (j == full) break;
  }
  if (collected.empty()) return OddSubalgebraResult{true, std::nullopt};
  return OddSubalgebraResult{false, collected.begin()->first};
}

OddClutterResult is_odd_clutter(const Clutter& c) {
  const int m = c.edges.size();
  if (m > kMaxPowersumEdges) throw BoundError("odd-clutter test bound exceeded");
  auto order = nerve_vertex_order(c);
  std::vector<Mask> picks;
  for (Mask pick = 1; pick < (Mask{1} << m); ++pick) picks.push_back(pick);
  std::sort(picks.begin(), picks.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  for (Mask pick : picks) {
    Mask inter = full_mask(c.n);
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) inter &= order[i];
    if (inter != 0 && popcount(inter) % 2 == 0) {
      std::vector<Mask> face;
      for (int i = 0; i < m; ++i)
        if ((pick >> i) & 1) face.push_back(order[i]);
      return OddClutterResult{false, std::move(face)};
    }
  }
  return OddClutterResult{true, std::nullopt};
}

StarResult satisfies_star(const Clutter& c) {
  for (Mask e : c.edges) {
    Mask others = 0;
    for (Mask f : c.edges)
      if (f != e) others |= f;
    if ((e & ~others) != 0 || e == others) return StarResult{false, e};
  }
  return StarResult{true, std::nullopt};
}

OddPartitionResult odd_partition_property(const Clutter& c) {
  const int m = c.edges.size();
  if (m > kMaxPowersumEdges) throw BoundError("odd-partition test bound exceeded");
  for (Mask pick = 0; pick < (Mask{1} << m); ++pick) {
    std::vector<Mask> sel;
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) sel.push_back(c.edges[i]);
    Hypergraph sub{c.n, sel};
    bool all_odd = true;
    for (Mask comp : connected_components(sub))
      if (popcount(comp) % 2 == 0) { all_odd = false; break; }
    if (!all_odd) return OddPartitionResult{false, std::move(sel)};
  }
  return OddPartitionResult{true, std::nullopt};
}

ClassificationReport classify(const Clutter& c) {
  ClassificationReport report;
  report.eulerian = is_eulerian(c.hyper());
  report.relation5 = check_relation5(c.hyper());
  report.odd_subalgebra = in_odd_subalgebra(c.hyper());
  report.odd_clutter = is_odd_clutter(c);
  report.nerve_flag = is_flag(nerve(c));
  report.chordal = is_chordal(intersection_graph(c));
  report.star = satisfies_star(c);
  report.odd_partition = odd_partition_property(c);
  return report;
}

bool is_eulerian_hypergraph_via_clutter(const Hypergraph& h) {
  return is_eulerian(minimal_edges(h).hyper()).eulerian;
}

}  // namespace cha
