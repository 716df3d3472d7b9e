#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "circuitcat/amodelrec.hpp"
#include "circuitcat/balgebra.hpp"
#include "circuitcat/circuit.hpp"
#include "circuitcat/mutation.hpp"

namespace circuitcat {

using Json = nlohmann::ordered_json;

/// DOT digraph, nodes R0..R{n-1}, one edge per arrow labelled by its generator.
std::string emit_dot(const std::vector<Arrow>& arrows, int n);
std::string emit_dot(const Circuit& c, int n);

Json to_json(const Circuit& c);
Json info_json(const Circuit& c);

/// {"objects", "homs": [{"src","dst","basis":[{"exp","deg","wt"}]}],
///  "compositions": [{"i","j","k","left","right","sign","result"}]}
Json to_json(const BCategory& cat);

/// Same layout; basis entries carry "m", "inner", "label" and "deg".
Json to_json(const ACategory& cat);

Json to_json(const IsoReport& report);

/// Row arrays; Poincare mode adds "poincare" with {degree: coefficient} maps.
Json to_json(const GramMatrix& g);

}  // namespace circuitcat
