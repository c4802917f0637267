#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cha/setfam.hpp"

// Quasisymmetric and symmetric function arithmetic: the chromatic
// symmetric function in the monomial and power-sum bases, the
// chromatic polynomial and the D_lambda transition involution.

namespace cha {

using Composition = std::vector<int>;  // positive parts, empty = degree 0
using Partition = std::vector<int>;    // weakly decreasing positive parts

// Integer combination of monomial quasisymmetric functions M_alpha.
struct QSymElement {
  std::map<Composition, std::int64_t> coeffs;

  void add(Composition alpha, std::int64_t c);
  std::int64_t coeff(const Composition& alpha) const;
  bool operator==(const QSymElement&) const = default;
};

// Integer combination of power sums p_lambda.
struct SymElement {
  std::map<Partition, std::int64_t> coeffs;

  void add(Partition lambda, std::int64_t c);
  std::int64_t coeff(const Partition& lambda) const;
  bool operator==(const SymElement&) const = default;
};

// Single-variable integer polynomial, constant term first.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  std::int64_t eval(std::int64_t m) const;
  bool operator==(const IntPolynomial&) const = default;
};

std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);  // reverse-lexicographic, (n) first
Partition sorted_partition(const Composition& alpha);

// Canonical morphism to QSym: coefficient of M_alpha is zeta_alpha(H).
QSymElement psi(const Hypergraph& h);

// Stanley expansion: Psi(C) = sum over subclutters S of (-1)^|S| p_{lambda(S)},
// lambda(S) the component sizes of S on the full vertex set of C.
SymElement psi_powersum(const Clutter& c);

// Expands a homogeneous power-sum element of degree n in the monomial
// basis, via p_k = M_(k) and the quasi-shuffle product.
QSymElement powersum_to_monomial(const SymElement& f, int degree);

// Overlapping-shuffle (quasi-shuffle) product on the monomial basis.
QSymElement qsym_multiply(const QSymElement& f, const QSymElement& g);

SymElement sym_multiply(const SymElement& f, const SymElement& g);

// chi(H, m): expands sum_k c_k * binom(m, k) with exact rational
// intermediates; a non-integer coefficient is an internal bug.
IntPolynomial chromatic_polynomial(const Hypergraph& h);

// Expands sum_k counts[k] * binom(m, k) into integer coefficients.
IntPolynomial counts_to_polynomial(const std::vector<std::int64_t>& counts, int n);

// Number of proper colorings with at most m colors (m >= 0); at m = -1
// this is the Mobius character.
std::int64_t eval_chromatic(const Hypergraph& h, std::int64_t m);

// f(1^m) = sum_alpha coeff(alpha) * binom(m, k(alpha)).
std::int64_t principal_specialization(const QSymElement& f, std::int64_t m);

// Power-sum expansion of Psi(D_lambda), the disjoint sum of single-edge
// clutters with |edge| = lambda_i (parts 1 contribute p_1 factors).
SymElement d_lambda_psi(const Partition& lambda);

// M with Psi(D_lambda) = sum_mu M[lambda][mu] p_mu over partitions of n
// in reverse-lexicographic order. Squares to the identity.
std::vector<std::vector<std::int64_t>> transition_matrix(int n);

// True iff every partition in the support has all parts odd.
bool is_odd_sym(const SymElement& f);

}  // namespace cha
