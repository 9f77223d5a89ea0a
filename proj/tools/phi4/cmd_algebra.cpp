#include <filesystem>
#include <fstream>
#include <ostream>

#include "context.hpp"
#include "phi4/canonical.hpp"
#include "phi4/commutativity.hpp"
#include "phi4/cumulants.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/hopf_poly.hpp"

namespace phi4::cli {

namespace {

std::string edge_list(const Multigraph& g) {
  std::string s;
  for (const auto& e : g.edges()) {
    if (!s.empty()) s += ';';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

void require_json(const Context& ctx, const std::string& command) {
  if (ctx.globals.format != "json") throw UsageError(command + " supports only --format json");
}

ordered_json to_json(const PolyDiagramSum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, term] : s) {
    ordered_json e = graph_entry(term.graph);
    e["coeff"] = cli::to_json(term.coeff);
    e["text"] = term.coeff.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

int run_cumulants(Context& ctx, int order, const std::string& kind) {
  const GradedSum s = kind == "moment" ? moment(order) : kind == "direct" ? cumulant_direct(order) : cumulant(order);
  const ordered_json args{{"order", order}, {"kind", kind}};
  auto& out = *ctx.out;
  if (ctx.globals.format == "csv") {
    out << "alpha_pow,beta_pow,key,vertices,edges,coeff\n";
    for (const auto& [sig, part] : s) {
      for (const auto& [key, term] : part) {
        out << sig.alpha_pow << ',' << sig.beta_pow << ',' << key.hex() << ',' << term.graph.vertex_count() << ','
            << edge_list(term.graph) << ',' << to_string(term.coeff) << '\n';
      }
    }
    return kOk;
  }
  if (ctx.globals.format == "dot-dir") {
    if (ctx.globals.out.empty()) throw UsageError("--format dot-dir needs --out DIR");
    const std::filesystem::path dir(ctx.globals.out);
    std::filesystem::create_directories(dir);
    ordered_json files = ordered_json::array();
    for (const auto& [sig, part] : s) {
      for (const auto& [key, term] : part) {
        const auto path = dir / (key.hex() + ".dot");
        if (std::filesystem::exists(path)) continue;
        std::ofstream f(path);
        f << to_dot(term.graph, "G_" + key.hex());
        files.push_back(path.filename().string());
      }
    }
    ctx.emit_json("cumulants", args, {{"order", order}, {"kind", kind}, {"directory", dir.string()}, {"files", files}});
    return kOk;
  }
  ctx.emit_json("cumulants", args,
                {{"order", order}, {"kind", kind}, {"connected", s.all_connected()}, {"terms", cli::to_json(s)}});
  return kOk;
}

}  // namespace

void add_algebra_commands(CLI::App& app, Context& ctx) {
  auto* cum = app.add_subcommand("cumulants", "Moments and cumulants of -(alpha X + beta Y) as diagram sums");
  auto order = std::make_shared<int>(2);
  auto kind = std::make_shared<std::string>("cumulant");
  cum->add_option("--order", *order, "Order n")->required()->check(CLI::Range(1, 6));
  cum->add_option("--kind", *kind, "moment, cumulant (by recursion) or direct (connected projection)")
      ->check(CLI::IsMember({"moment", "cumulant", "direct"}))
      ->capture_default_str();
  cum->callback([&ctx, order, kind] {
    ctx.action = [&ctx, order, kind] {
      if (*kind != "moment" && *order < 2) throw UsageError("cumulants start at order 2");
      return run_cumulants(ctx, *order, *kind);
    };
  });

  auto* hopf = app.add_subcommand("hopf", "Coproduct, antipodes and BPHZ on diagrams; polynomial-level identities");
  hopf->require_subcommand(1);
  auto graph = std::make_shared<std::string>();

  auto* cop = hopf->add_subcommand("coproduct", "Extraction-contraction coproduct");
  cop->add_option("--graph", *graph, "Graph JSON file or built-in name")->required();
  cop->callback([&ctx, graph] {
    ctx.action = [&ctx, graph] {
      require_json(ctx, "hopf coproduct");
      const Multigraph g = load_graph(*graph);
      const auto t = is_connected(g) ? coproduct(g) : coproduct_product(g);
      ctx.emit_json("hopf coproduct", {{"graph", *graph}},
                    {{"graph", graph_entry(g)}, {"coproduct", cli::to_json(t)}, {"coassociative", !is_connected(g) || coassociative(g)}});
      return kOk;
    };
  });

  auto method = std::make_shared<std::string>("recursive");
  auto* anti = hopf->add_subcommand("antipode", "Antipode of a diagram");
  anti->add_option("--graph", *graph, "Graph JSON file or built-in name")->required();
  anti->add_option("--method", *method, "recursive, forest or twisted")
      ->check(CLI::IsMember({"recursive", "forest", "twisted"}))
      ->capture_default_str();
  anti->callback([&ctx, graph, method] {
    ctx.action = [&ctx, graph, method] {
      require_json(ctx, "hopf antipode");
      const Multigraph g = load_graph(*graph);
      const DiagramSum a = *method == "forest" ? forest_antipode(g) : *method == "twisted" ? twisted_antipode(g) : antipode(g);
      ctx.emit_json("hopf antipode", {{"graph", *graph}, {"method", *method}},
                    {{"graph", graph_entry(g)}, {"method", *method}, {"antipode", cli::to_json(a)}});
      return kOk;
    };
  });

  auto* bphz = hopf->add_subcommand("bphz", "Bubble-subtraction reduction and the counterterm character");
  bphz->add_option("--graph", *graph, "Graph JSON file or built-in name")->required();
  bphz->callback([&ctx, graph] {
    ctx.action = [&ctx, graph] {
      require_json(ctx, "hopf bphz");
      const Multigraph g = load_graph(*graph);
      ordered_json terms = ordered_json::array();
      for (const auto& t : bphz_reduce(g).terms) {
        terms.push_back({{"bubble_power", t.bubble_power}, {"contracted", graph_entry(t.contracted)}, {"coeff", to_string(t.coeff)}});
      }
      ctx.emit_json("hopf bphz", {{"graph", *graph}},
                    {{"graph", graph_entry(g)}, {"reduction", terms}, {"character", cli::to_json(bphz_character(g))}});
      return kOk;
    };
  });

  auto n = std::make_shared<int>(4);
  auto* comm = hopf->add_subcommand("commutativity", "Bubble contraction of X^n diagrams vs X^(n-2m) Y^m diagrams");
  comm->add_option("--n", *n, "Power of X")->check(CLI::Range(2, 5))->capture_default_str();
  comm->callback([&ctx, n] {
    ctx.action = [&ctx, n] {
      require_json(ctx, "hopf commutativity");
      const auto rep = verify_commutativity(*n);
      ordered_json rows = ordered_json::array();
      for (const auto& r : rep.rows) {
        rows.push_back({{"m", r.m}, {"equal", r.equal}, {"lhs", cli::to_json(r.lhs)}, {"rhs", cli::to_json(r.rhs)}});
      }
      ctx.emit_json("hopf commutativity", {{"n", *n}}, {{"n", *n}, {"all_equal", rep.all_equal}, {"rows", rows}});
      return rep.all_equal ? kOk : kVerificationFailed;
    };
  });

  auto x = std::make_shared<int>(2);
  auto y = std::make_shared<int>(1);
  auto* mixed = hopf->add_subcommand("mixed", "Deformed mixed monomial X^x Y^y vs bubble subtraction");
  mixed->add_option("--x", *x, "Power of X")->check(CLI::Range(0, 5))->capture_default_str();
  mixed->add_option("--y", *y, "Power of Y")->check(CLI::Range(0, 5))->capture_default_str();
  mixed->callback([&ctx, x, y] {
    ctx.action = [&ctx, x, y] {
      require_json(ctx, "hopf mixed");
      const auto rep = verify_mixed({*x, *y});
      ctx.emit_json("hopf mixed", {{"x", *x}, {"y", *y}},
                    {{"monomial", rep.monomial.to_string()}, {"equal", rep.equal}, {"lhs", to_json(rep.lhs)}, {"rhs", to_json(rep.rhs)}});
      return rep.equal ? kOk : kVerificationFailed;
    };
  });

  auto dorder = std::make_shared<int>(12);
  auto* deform_cmd = hopf->add_subcommand("deform", "(M o chi_eta) exp(-alpha X) against exp(-alpha X - beta Y)");
  deform_cmd->add_option("--order", *dorder, "Combined order")->check(CLI::Range(0, 12))->capture_default_str();
  deform_cmd->callback([&ctx, dorder] {
    ctx.action = [&ctx, dorder] {
      require_json(ctx, "hopf deform");
      const auto lhs = exp_deform(*dorder);
      const bool equal = lhs == exp_target(*dorder);
      ctx.emit_json("hopf deform", {{"order", *dorder}}, {{"order", *dorder}, {"equal", equal}, {"polynomial", cli::to_json(lhs)}});
      return equal ? kOk : kVerificationFailed;
    };
  });
}

}  // namespace phi4::cli
