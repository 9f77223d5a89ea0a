#include "json_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "phi4/canonical.hpp"
#include "phi4/error.hpp"

namespace phi4::cli {

ordered_json to_json(const Multigraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Multigraph graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InvalidArgument("graph JSON needs \"vertices\" and \"edges\"");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be a pair [u, v]");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return Multigraph(j.at("vertices").get<int>(), std::move(edges));
}

Multigraph load_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const ordered_json::exception& e) {
      throw InvalidArgument("cannot parse graph file " + spec + ": " + e.what());
    }
    return graph_from_json(j);
  }
  if (spec == "unit") return diagrams::unit();
  if (spec == "point") return diagrams::point();
  if (spec == "FGII") return diagrams::banana(2);
  if (spec == "FGIII" || spec == "bubble") return diagrams::bubble();
  if (spec == "FGIV") return diagrams::banana(4);
  if (spec == "FGVI" || spec == "double-triangle") return diagrams::double_triangle();
  if (spec == "FGIII+" || spec == "bubble-with-tail") return diagrams::bubble_with_tail();
  if (spec == "triangle") return diagrams::triangle();
  if (spec.rfind("banana", 0) == 0 && spec.size() > 6 &&
      std::all_of(spec.begin() + 6, spec.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return diagrams::banana(std::stoi(spec.substr(6)));
  }
  throw InvalidArgument("no graph file or built-in graph named '" + spec + "'");
}

ordered_json graph_entry(const Multigraph& g) {
  ordered_json j = to_json(g);
  j["key"] = canonicalize(g).hex();
  return j;
}

ordered_json class_entry(const Multigraph& g, const Rational& coeff) {
  ordered_json j = graph_entry(g);
  j["coeff"] = to_string(coeff);
  return j;
}

ordered_json to_json(const DiagramSum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, term] : s) out.push_back(class_entry(term.graph, term.coeff));
  return out;
}

ordered_json to_json(const GradedSum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& [sig, part] : s) {
    if (part.empty()) continue;
    out.push_back({{"alpha_pow", sig.alpha_pow}, {"beta_pow", sig.beta_pow}, {"classes", to_json(part)}});
  }
  return out;
}

ordered_json to_json(const GraphTensorSum& t) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, term] : t) {
    out.push_back({{"left", graph_entry(term.left)}, {"right", graph_entry(term.right)}, {"coeff", to_string(term.coeff)}});
  }
  return out;
}

ordered_json to_json(const ScalarPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [sig, c] : p) {
    out.push_back({{"alpha_pow", sig.alpha_pow}, {"beta_pow", sig.beta_pow}, {"coeff", to_string(c)}});
  }
  return out;
}

ordered_json to_json(const HPolynomial& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [m, c] : p) {
    out.push_back({{"monomial", m.to_string()}, {"x_pow", m.x_pow}, {"y_pow", m.y_pow}, {"coeff", to_json(c)},
                   {"text", c.to_string()}});
  }
  return out;
}

ordered_json to_json(const SymbolicCoefficient& c) {
  ordered_json out = ordered_json::array();
  for (const auto& [sym, s] : c.terms) {
    out.push_back({{"C2_pow", sym.c2}, {"C3_pow", sym.c3}, {"C4_pow", sym.c4}, {"classes", to_json(s)}});
  }
  return out;
}

}  // namespace phi4::cli
