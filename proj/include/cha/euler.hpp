#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cha/complexes.hpp"
#include "cha/hopf.hpp"
#include "cha/setfam.hpp"
#include "cha/symfun.hpp"

// Eulerian classification and generalized Dehn-Sommerville machinery.
// Every failed predicate carries a concrete witness that re-verifies
// independently; witnesses are the first violation in a fixed
// deterministic enumeration order.

namespace cha {

struct EulerianResult {
  bool eulerian = true;
  std::optional<Mask> witness;  // vertex subset I with nondiscrete H|_I and zinv != 0
};

// True iff every restriction is discrete or has vanishing Mobius
// character, computed bottom-up over the subset lattice.
EulerianResult is_eulerian(const Hypergraph& h);

struct Relation5Result {
  bool holds = true;
  std::optional<std::pair<Composition, int>> witness;  // (alpha, position i, 0-based)
};

// Checks the alternating flag-coefficient sums for every composition of
// n and every position; zero parts are dropped before evaluating zeta.
Relation5Result check_relation5(const Hypergraph& h);

struct OddSubalgebraResult {
  bool in_odd = true;
  std::optional<std::pair<CanonicalCode, CanonicalCode>> witness;  // tensor key with nonzero coefficient
};

// Membership in the odd subalgebra: (id (x) (zeta_bar - zeta^{-1}) (x)
// id) applied to the double coproduct must vanish termwise.
OddSubalgebraResult in_odd_subalgebra(const Hypergraph& h);

struct OddClutterResult {
  bool odd = true;
  std::optional<std::vector<Mask>> witness;  // nerve face with even common intersection
};

// Every nerve face (including singletons) must have odd-size common
// intersection.
OddClutterResult is_odd_clutter(const Clutter& c);

struct StarResult {
  bool holds = true;
  std::optional<Mask> witness;  // edge not strictly inside the union of the others
};

// Condition (*): every edge is strictly contained in the union of the
// remaining edges.
StarResult satisfies_star(const Clutter& c);

struct OddPartitionResult {
  bool holds = true;
  std::optional<std::vector<Mask>> witness;  // subclutter with an even component size
};

// lambda(S) all odd for every subclutter S (component sizes taken on
// the full vertex set).
OddPartitionResult odd_partition_property(const Clutter& c);

struct ClassificationReport {
  EulerianResult eulerian;
  Relation5Result relation5;
  OddSubalgebraResult odd_subalgebra;
  OddClutterResult odd_clutter;
  FlagResult nerve_flag;
  ChordalityResult chordal;
  StarResult star;
  OddPartitionResult odd_partition;
};

ClassificationReport classify(const Clutter& c);

// Proposition route: a hypergraph is eulerian iff its minimal-edge
// clutter is.
bool is_eulerian_hypergraph_via_clutter(const Hypergraph& h);

// Memoizing evaluator for zeta_alpha against a fixed hypergraph; keyed
// by the sorted partition (the coproduct is cocommutative, so the
// convolution coefficient only depends on the multiset of parts).
class ZetaCache {
 public:
  explicit ZetaCache(const Hypergraph& h);
  std::int64_t operator()(const Composition& alpha);

 private:
  int n_;
  std::vector<char> ind_;
  std::map<Partition, std::int64_t> cache_;
};

}  // namespace cha
