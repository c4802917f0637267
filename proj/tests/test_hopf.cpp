#include <random>

#include "doctest.h"

#include "cha/hopf.hpp"
#include "cha/setfam.hpp"
#include "cha/symfun.hpp"
#include "util.hpp"

using namespace cha;
using testutil::H;

static std::vector<CanonicalCode> key1(const Hypergraph& h) { return {canonical_code(h)}; }

TEST_CASE("coproduct of small hypergraphs") {
  Hypergraph empty = H(0, {});
  LinearCombo d = coproduct(empty);
  CHECK(d.terms.size() == 1);
  CHECK(d.coeff({canonical_code(empty), canonical_code(empty)}) == 1);

  Hypergraph d1 = H(1, {});
  d = coproduct(d1);
  CHECK(d.total_mass() == 2);
  CHECK(d.coeff({canonical_code(d1), canonical_code(empty)}) == 1);
  CHECK(d.coeff({canonical_code(empty), canonical_code(d1)}) == 1);

  Hypergraph k3 = H(3, {{0, 1}, {1, 2}, {0, 2}});
  Hypergraph e2 = H(2, {{0, 1}});
  d = coproduct(k3);
  CHECK(d.total_mass() == 8);
  CHECK(d.coeff({canonical_code(empty), canonical_code(k3)}) == 1);
  CHECK(d.coeff({canonical_code(d1), canonical_code(e2)}) == 3);
  CHECK(d.coeff({canonical_code(e2), canonical_code(d1)}) == 3);
  CHECK(d.coeff({canonical_code(k3), canonical_code(empty)}) == 1);
}

TEST_CASE("coproduct is cocommutative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = testutil::random_hypergraph(rng, 5);
    LinearCombo d = coproduct(h);
    for (auto& [key, c] : d.terms) CHECK(d.coeff({key[1], key[0]}) == c);
  }
}

TEST_CASE("iterated coproduct") {
  std::mt19937 rng(19);
  Hypergraph h = testutil::random_hypergraph(rng, 4);
  LinearCombo once = iterated_coproduct(h, 1);
  CHECK(once.terms.size() == 1);
  CHECK(once.coeff(key1(h)) == 1);
  CHECK(iterated_coproduct(h, 2) == coproduct(h));
  CHECK_THROWS_AS(iterated_coproduct(h, 0), InputError);

  Hypergraph d2 = H(2, {});
  LinearCombo thrice = iterated_coproduct(d2, 3);
  CHECK(thrice.total_mass() == 9);
  Hypergraph d1 = H(1, {}), empty = H(0, {});
  CHECK(thrice.coeff({canonical_code(d1), canonical_code(d1), canonical_code(empty)}) == 2);
}

TEST_CASE("zeta_alpha examples") {
  CHECK(zeta_alpha(H(2, {}), {1, 1}) == 2);
  Hypergraph k3 = H(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(zeta_alpha(k3, {2, 1}) == 0);
  CHECK(zeta_alpha(k3, {1, 1, 1}) == 6);
  CHECK(zeta_alpha(H(0, {}), {}) == 1);
  CHECK_THROWS_AS(zeta_alpha(k3, {2, 2}), InputError);
}

TEST_CASE("zeta_alpha agrees with direct enumeration") {
  std::mt19937 rng(31);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Hypergraph h = testutil::random_hypergraph(rng, n);
      for (const auto& alpha : compositions_of(n))
        CHECK(zeta_alpha(h, alpha) == testutil::zeta_alpha_oracle(h, alpha));
    }
}

TEST_CASE("zeta_alpha is isomorphism invariant") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = testutil::random_hypergraph(rng, 5);
    Hypergraph g = relabel(h, testutil::random_permutation(rng, 5));
    for (const auto& alpha : compositions_of(5)) CHECK(zeta_alpha(h, alpha) == zeta_alpha(g, alpha));
  }
}

TEST_CASE("surjection counts on discrete hypergraphs") {
  // sum over compositions with k parts of zeta_alpha(D_n) equals the
  // number of surjections [n] -> [k], checked against enumeration.
  for (int n = 1; n <= 6; ++n) {
    Hypergraph d = H(n, {});
    for (int k = 1; k <= n; ++k) {
      long long sum = 0;
      for (const auto& alpha : compositions_of(n))
        if ((int)alpha.size() == k) sum += zeta_alpha(d, alpha);
      // direct surjection count
      long long surj = 0;
      std::vector<int> f(n, 0);
      while (true) {
        Mask hit = 0;
        for (int v : f) hit |= Mask{1} << v;
        if (hit == full_mask(k)) ++surj;
        int i = 0;
        while (i < n && f[i] == k - 1) f[i++] = 0;
        if (i == n) break;
        ++f[i];
      }
      CHECK(sum == surj);
    }
  }
}

TEST_CASE("antipode of small instances") {
  Hypergraph d1 = H(1, {});
  LinearCombo s = antipode_takeuchi(d1);
  CHECK(s.terms.size() == 1);
  CHECK(s.coeff(key1(d1)) == -1);

  Hypergraph e2 = H(2, {{0, 1}});
  Hypergraph d2 = H(2, {});
  s = antipode_takeuchi(e2);
  CHECK(s.coeff(key1(e2)) == -1);
  CHECK(s.coeff(key1(d2)) == 2);
  CHECK(s.terms.size() == 2);

  s = antipode_takeuchi(d2);
  CHECK(s.terms.size() == 1);
  CHECK(s.coeff(key1(d2)) == 1);  // S(D_n) = (-1)^n D_n

  CHECK(antipode_recursive(e2) == antipode_takeuchi(e2));
}

TEST_CASE("both antipode methods coincide") {
  std::mt19937 rng(41);
  for (int n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      Hypergraph h = testutil::random_hypergraph(rng, n);
      CHECK(antipode_recursive(h) == antipode_takeuchi(h));
    }
}

TEST_CASE("convolution identity m(S x id)Delta = u eps") {
  std::mt19937 rng(43);
  for (int n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      Hypergraph h = testutil::random_hypergraph(rng, n);
      for (bool recursive : {false, true}) {
        LinearCombo collapsed{1, {}};
        const Mask full = full_mask(h.n);
        Mask sub = 0;
        do {
          Hypergraph right = restrict(h, full & ~sub);
          LinearCombo s = recursive ? antipode_recursive(restrict(h, sub))
                                    : antipode_takeuchi(restrict(h, sub));
          for (auto& [key, c] : s.terms)
            collapsed.add(key1(disjoint_sum(from_code(key[0]), right)), c);
          sub = (sub - full) & full;
        } while (sub != 0);
        LinearCombo expected{1, {}};
        expected.add(key1(H(0, {})), h.n == 0 ? 1 : 0);
        CHECK(collapsed == expected);
      }
    }
}

TEST_CASE("zeta_inverse closed forms") {
  for (int size = 2; size <= 6; ++size) {
    std::vector<int> edge(size);
    for (int i = 0; i < size; ++i) edge[i] = i;
    Hypergraph single = H(size, {edge});
    std::int64_t expected = (size % 2 ? -1 : 1) + 1;  // (-1)^|V| + 1
    for (auto method : {ZinvMethod::kTakeuchiSum, ZinvMethod::kDeletionContraction}) {
      CHECK(zeta_inverse(single, method) == expected);
    }
    if (size <= 5) CHECK(zeta_inverse(single, ZinvMethod::kAntipodeThenZeta) == expected);
  }
  for (int n = 0; n <= 6; ++n)
    CHECK(zeta_inverse(H(n, {})) == (n % 2 ? -1 : 1));
  CHECK(zeta_inverse(H(3, {{0, 1}, {1, 2}, {0, 2}})) == -6);
}

TEST_CASE("zeta_inverse methods agree") {
  std::mt19937 rng(47);
  for (int n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Hypergraph h = testutil::random_hypergraph(rng, n);
      std::int64_t a = zeta_inverse(h, ZinvMethod::kTakeuchiSum);
      CHECK(a == zeta_inverse(h, ZinvMethod::kDeletionContraction));
      CHECK(a == zeta_inverse(h, ZinvMethod::kAntipodeThenZeta));
    }
}

TEST_CASE("zeta_inverse is a character") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph a = testutil::random_hypergraph(rng, 4);
    Hypergraph b = testutil::random_hypergraph(rng, 3);
    CHECK(zeta_inverse(disjoint_sum(a, b)) == zeta_inverse(a) * zeta_inverse(b));
  }
}

TEST_CASE("zeta_inverse factors through minimal edges") {
  std::mt19937 rng(59);
  for (int n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Hypergraph h = testutil::random_hypergraph(rng, n);
      CHECK(zeta_inverse(h) == zeta_inverse(minimal_edges(h).hyper()));
    }
}

TEST_CASE("euler character") {
  for (int n = 1; n <= 6; ++n) CHECK(euler_character(H(n, {})) == 0);
  CHECK(euler_character(H(0, {})) == 1);
  CHECK(euler_character(H(2, {{0, 1}})) == -2);
  CHECK(euler_character(H(3, {{0, 1}, {1, 2}, {0, 2}})) == 0);
}

TEST_CASE("characters are multiplicative on disjoint sums") {
  std::mt19937 rng(61);
  for (const Character* chi : {&kZeta, &kZetaBar, &kCounit}) {
    for (int trial = 0; trial < 20; ++trial) {
      Hypergraph a = testutil::random_hypergraph(rng, 3);
      Hypergraph b = testutil::random_hypergraph(rng, 4);
      CHECK(chi->eval(disjoint_sum(a, b)) == chi->eval(a) * chi->eval(b));
    }
  }
}
