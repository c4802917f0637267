#include "cha/hopf.hpp"

#include <algorithm>
#include <numeric>

#include "cha/checked.hpp"
#include "cha/subsetdp.hpp"

namespace cha {

void LinearCombo::add(std::vector<CanonicalCode> key, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }
}

std::int64_t LinearCombo::coeff(const std::vector<CanonicalCode>& key) const {
  auto it = terms.find(key);
  return it == terms.end() ? 0 : it->second;
}

std::int64_t LinearCombo::total_mass() const {
  std::int64_t acc = 0;
  for (auto& [key, c] : terms) acc = checked_add(acc, c);
  return acc;
}

static std::int64_t eval_zeta(const Hypergraph& h) { return h.is_discrete() ? 1 : 0; }
static std::int64_t eval_zeta_bar(const Hypergraph& h) {
  return h.is_discrete() ? (h.n % 2 ? -1 : 1) : 0;
}
static std::int64_t eval_counit(const Hypergraph& h) { return h.n == 0 ? 1 : 0; }

const Character kZeta{"zeta", eval_zeta};
const Character kZetaBar{"zeta_bar", eval_zeta_bar};
const Character kCounit{"counit", eval_counit};

Hypergraph from_code(const CanonicalCode& code) { return Hypergraph{code.n, code.edges}; }

LinearCombo coproduct(const Hypergraph& h) {
  LinearCombo out{2, {}};
  const Mask full = full_mask(h.n);
  Mask sub = 0;
  do {
    out.add({canonical_code(restrict(h, sub)), canonical_code(restrict(h, full & ~sub))}, 1);
    sub = (sub - full) & full;  // next subset of full
  } while (sub != 0);
  return out;
}

LinearCombo iterated_coproduct(const Hypergraph& h, int k) {
  if (k < 1) throw InputError("tensor arity must be at least 1");
  double cost = 1;
  for (int i = 0; i < h.n; ++i) cost *= k;
  if (cost > 2e7) throw BoundError("iterated coproduct too large");

  LinearCombo out{k, {}};
  std::vector<int> assign(h.n, 0);
  while (true) {
    std::vector<Mask> blocks(k, 0);
    for (int v = 0; v < h.n; ++v) blocks[assign[v]] |= Mask{1} << v;
    std::vector<CanonicalCode> key;
    key.reserve(k);
    for (Mask b : blocks) key.push_back(canonical_code(restrict(h, b)));
    out.add(std::move(key), 1);
    int i = 0;
    while (i < h.n && assign[i] == k - 1) assign[i++] = 0;
    if (i == h.n) break;
    ++assign[i];
  }
  return out;
}

std::int64_t zeta_alpha(const Hypergraph& h, const std::vector<int>& alpha) {
  std::int64_t sum = 0;
  for (int a : alpha) {
    if (a < 1) throw InputError("composition parts must be positive");
    sum += a;
  }
  if (sum != h.n) throw InputError("composition does not sum to the vertex count");
  if (h.n == 0) return 1;  // empty composition of 0
  return sized_decomposition_count(independence_table(h), h.n, alpha);
}

// Enumerates unordered set partitions of [0, n) by restricted-growth
// strings; each partition into k blocks stands for k! ordered
// decompositions, all giving the same disjoint sum up to isomorphism.
LinearCombo antipode_takeuchi(const Hypergraph& h) {
  if (h.n > kMaxAntipodeVertices)
    throw BoundError("antipode limited to n <= " + std::to_string(kMaxAntipodeVertices));
  LinearCombo out{1, {}};
  if (h.n == 0) {
    out.add({canonical_code(h)}, 1);
    return out;
  }
  std::vector<int> rgs(h.n, 0);
  while (true) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Mask> blocks(k, 0);
    for (int v = 0; v < h.n; ++v) blocks[rgs[v]] |= Mask{1} << v;
    Hypergraph term{0, {}};
    for (Mask b : blocks) term = disjoint_sum(term, restrict(h, b));
    std::int64_t factorial = 1;
    for (int i = 2; i <= k; ++i) factorial = checked_mul(factorial, i);
    out.add({canonical_code(term)}, (k % 2 ? -1 : 1) * factorial);

    // next restricted-growth string
    int i = h.n - 1;
    while (i > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
      rgs[i--] = 0;
    }
    if (i == 0) break;
    ++rgs[i];
  }
  return out;
}

static LinearCombo antipode_memo(const Hypergraph& h,
                                 std::map<CanonicalCode, LinearCombo>& memo) {
  CanonicalCode code = canonical_code(h);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  LinearCombo out{1, {}};
  if (h.n == 0) {
    out.add({code}, 1);
  } else {
    // S(H) = -H - sum over proper nonempty I of S(H|_I) sqcup H|_{V\I}
    out.add({code}, -1);
    const Mask full = full_mask(h.n);
    for (Mask sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
      Hypergraph rest = restrict(h, full & ~sub);
      LinearCombo inner = antipode_memo(restrict(h, sub), memo);
      for (auto& [key, c] : inner.terms) {
        Hypergraph term = disjoint_sum(from_code(key[0]), rest);
        out.add({canonical_code(term)}, checked_mul(c, -1));
      }
    }
  }
  memo.emplace(std::move(code), out);
  return out;
}

LinearCombo antipode_recursive(const Hypergraph& h) {
  std::map<CanonicalCode, LinearCombo> memo;
  return antipode_memo(h, memo);
}

static std::int64_t zinv_deletion_contraction(const Clutter& c,
                                              std::map<CanonicalCode, std::int64_t>& memo) {
  if (c.edges.empty()) return c.n % 2 ? -1 : 1;
  CanonicalCode code = canonical_code(c);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  // pivot: lexicographically smallest edge of maximum size
  Mask pivot = 0;
  int best_size = -1;
  std::vector<int> best_vs;
  for (Mask e : c.edges) {
    auto vs = mask_to_vertices(e);
    if ((int)vs.size() > best_size || ((int)vs.size() == best_size && vs < best_vs)) {
      best_size = vs.size();
      best_vs = vs;
      pivot = e;
    }
  }
  std::int64_t val = checked_add(zinv_deletion_contraction(delete_edge(c, pivot), memo),
                                 -zinv_deletion_contraction(contract_edge(c, pivot), memo));
  memo.emplace(std::move(code), val);
  return val;
}

std::int64_t zeta_inverse(const Hypergraph& h, ZinvMethod method) {
  switch (method) {
    case ZinvMethod::kTakeuchiSum: {
      auto counts = block_counts(independence_table(h), h.n);
      std::int64_t acc = 0;
      for (int k = 0; k <= h.n; ++k)
        acc = checked_add(acc, (k % 2 ? -1 : 1) * counts[k]);
      return acc;
    }
    case ZinvMethod::kDeletionContraction: {
      std::map<CanonicalCode, std::int64_t> memo;
      return zinv_deletion_contraction(minimal_edges(h), memo);
    }
    case ZinvMethod::kAntipodeThenZeta:
      return apply_character(kZeta, antipode_takeuchi(h));
  }
  throw InputError("unknown zeta_inverse method");
}

std::int64_t euler_character(const Hypergraph& h) {
  if (h.n == 0) return 1;
  auto ind = independence_table(h);
  const Mask full = full_mask(h.n);
  std::int64_t acc = 0;
  for (Mask sub = 0;; sub = (sub - full) & full) {
    if (ind[sub] && ind[full & ~sub]) acc += popcount(sub) % 2 ? -1 : 1;
    if (sub == full) break;
  }
  return acc;
}

std::int64_t apply_character(const Character& chi, const LinearCombo& combo) {
  std::int64_t acc = 0;
  for (auto& [key, c] : combo.terms) {
    std::int64_t term = c;
    for (auto& code : key) term = checked_mul(term, chi.eval(from_code(code)));
    acc = checked_add(acc, term);
  }
  return acc;
}

}  // namespace cha
