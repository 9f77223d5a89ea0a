#pragma once

#include <json.hpp>
#include <string>

#include "phi4/cumulants.hpp"
#include "phi4/diagram_sum.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/hopf_poly.hpp"
#include "phi4/multigraph.hpp"

namespace phi4::cli {

using nlohmann::ordered_json;

// {"vertices": n, "edges": [[u, v], ...]}
ordered_json to_json(const Multigraph& g);
Multigraph graph_from_json(const ordered_json& j);

// A graph argument: a JSON file path or a built-in name (FGII, bubble, FGIV,
// FGVI, FGIII+, triangle, point, unit, bananaK).
Multigraph load_graph(const std::string& spec);

// Graph plus its canonical key; class_entry adds the coefficient.
ordered_json graph_entry(const Multigraph& g);
ordered_json class_entry(const Multigraph& g, const Rational& coeff);
ordered_json to_json(const DiagramSum& s);
ordered_json to_json(const GradedSum& s);
ordered_json to_json(const GraphTensorSum& t);
ordered_json to_json(const ScalarPoly& p);
ordered_json to_json(const HPolynomial& p);
ordered_json to_json(const SymbolicCoefficient& c);

}  // namespace phi4::cli
