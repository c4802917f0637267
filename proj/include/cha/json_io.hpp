#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cha/complexes.hpp"
#include "cha/euler.hpp"
#include "cha/hopf.hpp"
#include "cha/setfam.hpp"
#include "cha/symfun.hpp"

// JSON instance formats:
//   hypergraph / clutter: {"vertices": n, "edges": [[...], ...]}
//   complex:              {"vertices": n, "facets": [[...], ...]}
// Vertices are 0-based unless "one_based": true (or the --one-based
// flag); edge order and within-edge order are irrelevant on input and
// sorted ascending on output.

namespace cha {

using Json = nlohmann::json;

Hypergraph hypergraph_from_json(const Json& j, bool one_based = false);
Clutter clutter_from_json(const Json& j, bool one_based = false);
SimplicialComplex complex_from_json(const Json& j, bool one_based = false);

Json hypergraph_to_json(const Hypergraph& h);
Json clutter_to_json(const Clutter& c);
Json complex_to_json(const SimplicialComplex& k);

Json qsym_to_json(const QSymElement& f);
Json sym_to_json(const SymElement& f);
Json polynomial_to_json(const IntPolynomial& p);
Json combo_to_json(const LinearCombo& combo);
Json classification_to_json(const ClassificationReport& report, const Clutter& c);

}  // namespace cha
