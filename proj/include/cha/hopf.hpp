#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cha/setfam.hpp"

// Hopf-algebra layer over isomorphism classes of hypergraphs:
// coproducts, characters, antipodes and the Mobius character.

namespace cha {

// An integer linear combination of k-fold tensors of isomorphism
// classes. Zero coefficients are never stored.
struct LinearCombo {
  int arity = 1;
  std::map<std::vector<CanonicalCode>, std::int64_t> terms;

  void add(std::vector<CanonicalCode> key, std::int64_t coeff);
  std::int64_t coeff(const std::vector<CanonicalCode>& key) const;
  std::int64_t total_mass() const;  // sum of coefficients
  bool operator==(const LinearCombo&) const = default;
};

// Multiplicative linear functionals on the hypergraph Hopf algebra.
struct Character {
  const char* name;
  std::int64_t (*eval)(const Hypergraph&);
};

// zeta: 1 on discrete hypergraphs, 0 otherwise.
extern const Character kZeta;
// conjugate character: (-1)^n on discrete hypergraphs, 0 otherwise.
extern const Character kZetaBar;
// counit: 1 on the empty hypergraph only.
extern const Character kCounit;

// Delta(H) = sum over subsets I of H|_I (x) H|_complement, collected on
// canonical codes. Coefficient mass 2^n.
LinearCombo coproduct(const Hypergraph& h);

// Delta^(k-1): sum over ordered decompositions into k possibly-empty
// blocks. Coefficient mass k^n. Throws InputError for k < 1.
LinearCombo iterated_coproduct(const Hypergraph& h, int k);

// Convolution coefficient: the number of ordered decompositions of the
// vertex set into discrete blocks of sizes alpha. Throws InputError if
// alpha is not a composition of n.
std::int64_t zeta_alpha(const Hypergraph& h, const std::vector<int>& alpha);

// Antipode by the alternating sum over ordered decompositions into
// nonempty blocks. Bounded by kMaxAntipodeVertices.
LinearCombo antipode_takeuchi(const Hypergraph& h);

// Antipode by the recursion of a graded connected bialgebra, memoized
// on canonical codes. Must agree with antipode_takeuchi.
LinearCombo antipode_recursive(const Hypergraph& h);

enum class ZinvMethod {
  kTakeuchiSum,          // alternating sum over block counts (subset DP)
  kDeletionContraction,  // on the minimal-edge clutter, memoized
  kAntipodeThenZeta,     // zeta applied to antipode_takeuchi
};

// Mobius character zeta^{-1}(H) = chi(H, -1). All methods agree.
std::int64_t zeta_inverse(const Hypergraph& h, ZinvMethod method = ZinvMethod::kDeletionContraction);

// Euler character chi = conv(zeta_bar, zeta): sum over subsets I with
// H|_I and H|_complement both discrete of (-1)^|I|.
std::int64_t euler_character(const Hypergraph& h);

// Evaluates a multiplicative character on a linear combination: each
// tensor factor is evaluated and the results are multiplied.
std::int64_t apply_character(const Character& chi, const LinearCombo& combo);

// Reconstructs the labeled representative of a canonical code.
Hypergraph from_code(const CanonicalCode& code);

}  // namespace cha
