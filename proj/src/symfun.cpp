#include "cha/symfun.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "cha/checked.hpp"
#include "cha/hopf.hpp"
#include "cha/subsetdp.hpp"

namespace cha {

using BigInt = boost::multiprecision::cpp_int;

void QSymElement::add(Composition alpha, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(std::move(alpha), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
  }
}

std::int64_t QSymElement::coeff(const Composition& alpha) const {
  auto it = coeffs.find(alpha);
  return it == coeffs.end() ? 0 : it->second;
}

void SymElement::add(Partition lambda, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(std::move(lambda), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
  }
}

std::int64_t SymElement::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? 0 : it->second;
}

std::int64_t IntPolynomial::eval(std::int64_t m) const {
  std::int64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = checked_add(checked_mul(acc, m), *it);
  return acc;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int a = 1; a <= rest; ++a) {
      cur.push_back(a);
      rec(rest - a);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int a = std::min(rest, max); a >= 1; --a) {
      cur.push_back(a);
      rec(rest - a, a);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;  // generated largest-first: (n) first, (1^n) last
}

Partition sorted_partition(const Composition& alpha) {
  Partition p = alpha;
  std::sort(p.rbegin(), p.rend());
  return p;
}

QSymElement psi(const Hypergraph& h) {
  if (h.n > kMaxPsiVertices)
    throw BoundError("psi limited to n <= " + std::to_string(kMaxPsiVertices));
  QSymElement out;
  if (h.n == 0) {
    out.add({}, 1);
    return out;
  }
  auto ind = independence_table(h);
  for (const Composition& alpha : compositions_of(h.n))
    out.add(alpha, sized_decomposition_count(ind, h.n, alpha));
  return out;
}

SymElement psi_powersum(const Clutter& c) {
  if ((int)c.edges.size() > kMaxPowersumEdges)
    throw BoundError("power-sum expansion limited to " + std::to_string(kMaxPowersumEdges) + " edges");
  SymElement out;
  const std::size_t count = c.edges.size();
  for (std::size_t pick = 0; pick < (std::size_t{1} << count); ++pick) {
    std::vector<Mask> sel;
    for (std::size_t i = 0; i < count; ++i)
      if ((pick >> i) & 1) sel.push_back(c.edges[i]);
    Hypergraph sub{c.n, std::move(sel)};
    Partition lambda;
    for (Mask comp : connected_components(sub)) lambda.push_back(popcount(comp));
    std::sort(lambda.rbegin(), lambda.rend());
    out.add(std::move(lambda), popcount((Mask)pick) % 2 ? -1 : 1);
  }
  return out;
}

// quasi-shuffle of two compositions: at each step take a part from the
// left, from the right, or merge the two heads
static void quasi_shuffle(const Composition& a, std::size_t i, const Composition& b,
                          std::size_t j, Composition& cur, QSymElement& out,
                          std::int64_t c) {
  if (i == a.size() && j == b.size()) {
    out.add(cur, c);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, cur, out, c);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, cur, out, c);
    cur.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    cur.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, cur, out, c);
    cur.pop_back();
  }
}

QSymElement qsym_multiply(const QSymElement& f, const QSymElement& g) {
  QSymElement out;
  for (auto& [alpha, ca] : f.coeffs)
    for (auto& [beta, cb] : g.coeffs) {
      Composition cur;
      quasi_shuffle(alpha, 0, beta, 0, cur, out, checked_mul(ca, cb));
    }
  return out;
}

SymElement sym_multiply(const SymElement& f, const SymElement& g) {
  SymElement out;
  for (auto& [lambda, ca] : f.coeffs)
    for (auto& [mu, cb] : g.coeffs) {
      Partition merged = lambda;
      merged.insert(merged.end(), mu.begin(), mu.end());
      std::sort(merged.rbegin(), merged.rend());
      out.add(std::move(merged), checked_mul(ca, cb));
    }
  return out;
}

QSymElement powersum_to_monomial(const SymElement& f, int degree) {
  QSymElement out;
  for (auto& [lambda, c] : f.coeffs) {
    int sum = 0;
    for (int a : lambda) sum += a;
    if (sum != degree) throw InputError("power-sum element is not homogeneous of the given degree");
    QSymElement prod;
    prod.add({}, c);
    for (int a : lambda) {
      QSymElement pk;
      pk.add({a}, 1);
      prod = qsym_multiply(prod, pk);
    }
    for (auto& [alpha, pc] : prod.coeffs) out.add(alpha, pc);
  }
  return out;
}

// chi(m) = sum_k counts[k] * binom(m, k); expanded over the common
// denominator n! with exact big-integer arithmetic.
IntPolynomial counts_to_polynomial(const std::vector<std::int64_t>& counts, int n) {
  BigInt n_factorial = 1;
  for (int i = 2; i <= n; ++i) n_factorial *= i;
  std::vector<BigInt> num(n + 1, 0);  // numerator coefficients, * n!
  for (int k = 0; k <= n; ++k) {
    if (counts[k] == 0) continue;
    // falling factorial m(m-1)...(m-k+1)
    std::vector<BigInt> ff{1};
    for (int i = 0; i < k; ++i) {
      ff.push_back(0);
      for (int j = ff.size() - 1; j > 0; --j) ff[j] = ff[j - 1] - i * ff[j];
      ff[0] *= -i;
    }
    BigInt k_factorial = 1;
    for (int i = 2; i <= k; ++i) k_factorial *= i;
    BigInt scale = counts[k] * (n_factorial / k_factorial);
    for (std::size_t j = 0; j < ff.size(); ++j) num[j] += scale * ff[j];
  }
  IntPolynomial out;
  out.coeffs.assign(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    if (num[j] % n_factorial != 0)
      throw std::logic_error("chromatic polynomial has a non-integer coefficient");
    BigInt v = num[j] / n_factorial;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("chromatic polynomial coefficient overflow");
    out.coeffs[j] = (std::int64_t)v;
  }
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

IntPolynomial chromatic_polynomial(const Hypergraph& h) {
  if (h.n > kMaxVertices) throw BoundError("chromatic polynomial limited to n <= " + std::to_string(kMaxVertices));
  auto counts = h.n == 0 ? std::vector<std::int64_t>{1}
                         : block_counts(independence_table(h), h.n);
  return counts_to_polynomial(counts, h.n);
}

std::int64_t eval_chromatic(const Hypergraph& h, std::int64_t m) {
  return chromatic_polynomial(h).eval(m);
}

// binom(m, k) for any integer m, exact.
static std::int64_t integer_binomial(std::int64_t m, int k) {
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= (m - i);
  for (int i = 2; i <= k; ++i) num /= i;  // exact after the full product
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("binomial overflow");
  return (std::int64_t)num;
}

std::int64_t principal_specialization(const QSymElement& f, std::int64_t m) {
  std::int64_t acc = 0;
  for (auto& [alpha, c] : f.coeffs)
    acc = checked_add(acc, checked_mul(c, integer_binomial(m, alpha.size())));
  return acc;
}

SymElement d_lambda_psi(const Partition& lambda) {
  SymElement prod;
  prod.add({}, 1);
  for (int part : lambda) {
    SymElement factor;
    if (part == 1) {
      factor.add({1}, 1);
    } else {
      factor.add(Partition(part, 1), 1);  // p_{1^part}
      factor.add({part}, -1);
    }
    prod = sym_multiply(prod, factor);
  }
  return prod;
}

std::vector<std::vector<std::int64_t>> transition_matrix(int n) {
  auto parts = partitions_of(n);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = i;
  std::vector<std::vector<std::int64_t>> mat(parts.size(),
                                             std::vector<std::int64_t>(parts.size(), 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    SymElement row = d_lambda_psi(parts[i]);
    for (auto& [mu, c] : row.coeffs) mat[i][index.at(mu)] = c;
  }
  return mat;
}

bool is_odd_sym(const SymElement& f) {
  for (auto& [lambda, c] : f.coeffs)
    for (int a : lambda)
      if (a % 2 == 0) return false;
  return true;
}

}  // namespace cha
