#include "cha/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cha/euler.hpp"
#include "cha/symfun.hpp"

namespace cha {

std::vector<Clutter> clutter_isomorphism_classes(int n) {
  std::vector<Mask> candidates;
  for (Mask e = 0; e < (Mask{1} << n); ++e)
    if (popcount(e) >= 2) candidates.push_back(e);

  std::set<CanonicalCode> seen;
  std::vector<Clutter> reps;
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == candidates.size()) {
      Clutter c{n, chosen};
      CanonicalCode code = canonical_code(c);
      if (seen.insert(code).second) reps.push_back(Clutter{code.n, code.edges});
      return;
    }
    rec(idx + 1);
    Mask e = candidates[idx];
    for (Mask f : chosen)
      if ((e & ~f) == 0 || (f & ~e) == 0) return;  // would break the antichain
    chosen.push_back(e);
    rec(idx + 1);
    chosen.pop_back();
  };
  rec(0);
  return reps;
}

std::vector<Hypergraph> all_labeled_hypergraphs(int n) {
  std::vector<Mask> candidates;
  for (Mask e = 0; e < (Mask{1} << n); ++e)
    if (popcount(e) >= 2) candidates.push_back(e);
  if (candidates.size() > 22) throw BoundError("too many candidate edges to enumerate");
  std::vector<Hypergraph> out;
  for (std::size_t pick = 0; pick < (std::size_t{1} << candidates.size()); ++pick) {
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if ((pick >> i) & 1) edges.push_back(candidates[i]);
    out.push_back(Hypergraph{n, std::move(edges)});
  }
  return out;
}

TheoremCheckResult check_theorems(const Clutter& c) {
  ClassificationReport r = classify(c);
  TheoremCheckResult out;
  out.eulerian = r.eulerian.eulerian;
  out.relation5 = r.relation5.holds;
  out.odd_subalgebra = r.odd_subalgebra.in_odd;
  out.odd_clutter = r.odd_clutter.odd;
  out.nerve_flag = r.nerve_flag.flag;
  out.chordal = r.chordal.chordal;
  out.star = r.star.holds;
  out.odd_partition = r.odd_partition.holds;
  out.psi_support_odd = is_odd_sym(psi_powersum(c));

  std::string name = canonical_code(c).to_string();
  auto expect = [&](bool premise, bool conclusion, const char* rule) {
    if (premise && !conclusion) out.violations.push_back(std::string(rule) + " violated by " + name);
  };
  expect(out.eulerian, out.relation5, "eulerian => relation (5)");
  expect(out.eulerian, out.odd_subalgebra, "eulerian => odd subalgebra");
  expect(out.odd_clutter && out.chordal && out.nerve_flag, out.eulerian,
         "odd & chordal & flag => eulerian");
  expect(out.eulerian && out.star, out.odd_clutter && out.chordal && out.nerve_flag,
         "eulerian & (*) => odd & chordal & flag");
  expect(out.odd_partition, out.eulerian, "odd partitions => eulerian");
  expect(out.eulerian, out.psi_support_odd, "eulerian => odd power-sum support");
  return out;
}

static void fold(VerificationReport& report, const TheoremCheckResult& r) {
  ++report.total_clutters;
  if (r.eulerian) ++report.eulerian_count;
  if (r.relation5 && !r.eulerian) ++report.gds_not_eulerian_count;
  report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
}

VerificationReport verify_theorems_serial(int max_vertices, int hyper_max) {
  VerificationReport report;
  report.max_vertices = max_vertices;
  for (int n = 0; n <= max_vertices; ++n)
    for (const Clutter& c : clutter_isomorphism_classes(n)) fold(report, check_theorems(c));
  for (int n = 0; n <= hyper_max; ++n)
    for (const Hypergraph& h : all_labeled_hypergraphs(n)) {
      ++report.hypergraphs_checked;
      if (is_eulerian(h).eulerian != is_eulerian_hypergraph_via_clutter(h))
        report.violations.push_back("eulerian(H) <=> eulerian(C(H)) violated by " +
                                    canonical_code(h).to_string());
    }
  return report;
}

VerificationReport verify_theorems_parallel(int max_vertices, int hyper_max) {
  VerificationReport report;
  report.max_vertices = max_vertices;
  for (int n = 0; n <= max_vertices; ++n) {
    auto reps = clutter_isomorphism_classes(n);
    std::vector<TheoremCheckResult> results(reps.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < (std::int64_t)reps.size(); ++i)
      results[i] = check_theorems(reps[i]);
    for (const auto& r : results) fold(report, r);
  }
  for (int n = 0; n <= hyper_max; ++n) {
    auto hs = all_labeled_hypergraphs(n);
    std::vector<char> mismatch(hs.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < (std::int64_t)hs.size(); ++i)
      mismatch[i] = is_eulerian(hs[i]).eulerian != is_eulerian_hypergraph_via_clutter(hs[i]);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      ++report.hypergraphs_checked;
      if (mismatch[i])
        report.violations.push_back("eulerian(H) <=> eulerian(C(H)) violated by " +
                                    canonical_code(hs[i]).to_string());
    }
  }
  return report;
}

VerificationReport verify_theorems(int max_vertices, int hyper_max, bool parallel) {
  return parallel ? verify_theorems_parallel(max_vertices, hyper_max)
                  : verify_theorems_serial(max_vertices, hyper_max);
}

}  // namespace cha
