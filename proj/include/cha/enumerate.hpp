#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cha/setfam.hpp"

// Exhaustive instantiation of the structural theorems over all small
// clutters. Instances are independent, so the verifier features an
// OpenMP-parallel driver next to the serial reference one.

namespace cha {

// One representative per isomorphism class of clutters (edge sizes
// >= 2) on exactly n labeled vertices, isolated vertices allowed.
std::vector<Clutter> clutter_isomorphism_classes(int n);

// Every labeled hypergraph on exactly n vertices (edge sizes >= 2).
std::vector<Hypergraph> all_labeled_hypergraphs(int n);

struct TheoremCheckResult {
  bool eulerian = false;
  bool relation5 = false;
  bool odd_subalgebra = false;
  bool odd_clutter = false;
  bool nerve_flag = false;
  bool chordal = false;
  bool star = false;
  bool odd_partition = false;
  bool psi_support_odd = false;       // support of the power-sum expansion
  std::vector<std::string> violations;  // violated implications, empty if none
};

// Classifies one clutter and checks every implication the theorems
// assert; any violation names the instance.
TheoremCheckResult check_theorems(const Clutter& c);

struct VerificationReport {
  int max_vertices = 0;
  std::int64_t total_clutters = 0;
  std::int64_t eulerian_count = 0;
  std::int64_t gds_not_eulerian_count = 0;  // satisfy relation (5), not eulerian
  std::int64_t hypergraphs_checked = 0;     // for the clutter-projection equivalence
  std::vector<std::string> violations;
};

// Runs check_theorems over every isomorphism class of clutters on
// <= max_vertices vertices, plus the hypergraph/clutter eulerian
// equivalence over all labeled hypergraphs on <= hyper_max vertices.
VerificationReport verify_theorems_serial(int max_vertices, int hyper_max);
VerificationReport verify_theorems_parallel(int max_vertices, int hyper_max);
VerificationReport verify_theorems(int max_vertices, int hyper_max, bool parallel = true);

}  // namespace cha
