#include "cha/json_io.hpp"

#include <nlohmann/json.hpp>

namespace cha {

static std::vector<Mask> masks_from_json(const Json& arr, int n, bool one_based) {
  if (!arr.is_array()) throw InputError("edge list must be an array");
  std::vector<Mask> out;
  for (const auto& edge : arr) {
    if (!edge.is_array()) throw InputError("each edge must be an array of vertices");
    std::vector<int> vs;
    for (const auto& v : edge) {
      if (!v.is_number_integer()) throw InputError("vertices must be integers");
      vs.push_back(v.get<int>() - (one_based ? 1 : 0));
    }
    out.push_back(vertices_to_mask(vs, n));
    if ((int)vs.size() != popcount(out.back())) throw InputError("repeated vertex in an edge");
  }
  return out;
}

static int vertices_from_json(const Json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw InputError("instance needs an integer \"vertices\" field");
  int n = j["vertices"].get<int>();
  if (n < 0) throw InputError("vertex count must be non-negative");
  return n;
}

static bool one_based_flag(const Json& j, bool flag) {
  if (j.contains("one_based")) return j["one_based"].get<bool>();
  return flag;
}

Hypergraph hypergraph_from_json(const Json& j, bool one_based) {
  int n = vertices_from_json(j);
  bool ob = one_based_flag(j, one_based);
  return Hypergraph::make(n, masks_from_json(j.value("edges", Json::array()), n, ob));
}

Clutter clutter_from_json(const Json& j, bool one_based) {
  int n = vertices_from_json(j);
  bool ob = one_based_flag(j, one_based);
  return Clutter::make(n, masks_from_json(j.value("edges", Json::array()), n, ob));
}

SimplicialComplex complex_from_json(const Json& j, bool one_based) {
  int n = vertices_from_json(j);
  bool ob = one_based_flag(j, one_based);
  return SimplicialComplex::make(n, masks_from_json(j.value("facets", Json::array()), n, ob));
}

static Json masks_to_json(const std::vector<Mask>& masks) {
  Json arr = Json::array();
  for (Mask m : masks) arr.push_back(mask_to_vertices(m));
  return arr;
}

Json hypergraph_to_json(const Hypergraph& h) {
  return Json{{"vertices", h.n}, {"edges", masks_to_json(h.edges)}};
}

Json clutter_to_json(const Clutter& c) {
  return Json{{"vertices", c.n}, {"edges", masks_to_json(c.edges)}};
}

Json complex_to_json(const SimplicialComplex& k) {
  return Json{{"vertices", k.n}, {"facets", masks_to_json(k.facets)}};
}

Json qsym_to_json(const QSymElement& f) {
  Json arr = Json::array();
  for (auto& [alpha, c] : f.coeffs) arr.push_back(Json{{"composition", alpha}, {"coeff", c}});
  return arr;
}

Json sym_to_json(const SymElement& f) {
  Json arr = Json::array();
  for (auto& [lambda, c] : f.coeffs) arr.push_back(Json{{"partition", lambda}, {"coeff", c}});
  return arr;
}

Json polynomial_to_json(const IntPolynomial& p) { return Json(p.coeffs); }

Json combo_to_json(const LinearCombo& combo) {
  Json arr = Json::array();
  for (auto& [key, c] : combo.terms) {
    Json tensor = Json::array();
    for (auto& code : key) tensor.push_back(hypergraph_to_json(from_code(code)));
    arr.push_back(Json{{"coefficient", c}, {"tensor", tensor}});
  }
  return arr;
}

Json classification_to_json(const ClassificationReport& r, const Clutter& c) {
  Json flags{{"is_eulerian", r.eulerian.eulerian},
             {"satisfies_relation5", r.relation5.holds},
             {"in_odd_subalgebra", r.odd_subalgebra.in_odd},
             {"is_odd_clutter", r.odd_clutter.odd},
             {"nerve_is_flag", r.nerve_flag.flag},
             {"intersection_graph_chordal", r.chordal.chordal},
             {"satisfies_star", r.star.holds},
             {"odd_partition_property", r.odd_partition.holds}};
  Json witnesses = Json::object();
  if (r.eulerian.witness) witnesses["is_eulerian"] = Json{{"subset", mask_to_vertices(*r.eulerian.witness)}};
  if (r.relation5.witness)
    witnesses["satisfies_relation5"] =
        Json{{"composition", r.relation5.witness->first}, {"position", r.relation5.witness->second}};
  if (r.odd_subalgebra.witness)
    witnesses["in_odd_subalgebra"] =
        Json{{"left", hypergraph_to_json(from_code(r.odd_subalgebra.witness->first))},
             {"right", hypergraph_to_json(from_code(r.odd_subalgebra.witness->second))}};
  if (r.odd_clutter.witness) witnesses["is_odd_clutter"] = Json{{"face", masks_to_json(*r.odd_clutter.witness)}};
  if (r.chordal.chordless_cycle) {
    auto order = nerve_vertex_order(c);
    std::vector<Mask> cycle;
    for (int i : mask_to_vertices(*r.chordal.chordless_cycle)) cycle.push_back(order[i]);
    witnesses["intersection_graph_chordal"] = Json{{"chordless_cycle_edges", masks_to_json(cycle)}};
  }
  if (r.nerve_flag.nonface) {
    auto order = nerve_vertex_order(c);
    std::vector<Mask> nonface;
    for (int i : mask_to_vertices(*r.nerve_flag.nonface)) nonface.push_back(order[i]);
    witnesses["nerve_is_flag"] = Json{{"minimal_nonface_edges", masks_to_json(nonface)}};
  }
  if (r.star.witness) witnesses["satisfies_star"] = Json{{"edge", mask_to_vertices(*r.star.witness)}};
  if (r.odd_partition.witness)
    witnesses["odd_partition_property"] = Json{{"subclutter", masks_to_json(*r.odd_partition.witness)}};
  flags["witnesses"] = witnesses;
  return flags;
}

}  // namespace cha
