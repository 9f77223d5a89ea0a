#include <cmath>
#include <ostream>
#include <sstream>

#include "context.hpp"
#include "phi4/borel.hpp"
#include "phi4/gff.hpp"
#include "phi4/remainder_scan.hpp"
#include "phi4/scans.hpp"
#include "phi4/valuator.hpp"
#include "phi4/wick.hpp"

namespace phi4::cli {

namespace {

std::vector<std::pair<int, int>> parse_targets(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("moment targets look like a:b, got '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("moment targets look like a:b, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("no moment targets");
  return out;
}

std::string high(const HighFloat& v, int digits) { return v.str(digits, std::ios_base::scientific); }

ordered_json complex_list(const std::vector<std::complex<double>>& zs) {
  ordered_json out = ordered_json::array();
  for (const auto& z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

void no_csv(const Context& ctx, const std::string& command) {
  if (ctx.globals.format != "json") throw UsageError(command + " supports only --format json");
}

void add_valuation(CLI::App& app, Context& ctx) {
  auto* val = app.add_subcommand("valuation", "Cutoff valuations Pi_N, counterterms, scans and the free-field oracle");
  val->require_subcommand(1);

  auto graph = std::make_shared<std::string>();
  auto cutoff = std::make_shared<int>(2);
  auto method = std::make_shared<std::string>("momentum");
  auto grid = std::make_shared<int>(0);
  auto* pi_cmd = val->add_subcommand("pi", "Pi_N of one graph (multiplicative over components)");
  pi_cmd->add_option("--graph", *graph, "Graph JSON file or built-in name")->required();
  pi_cmd->add_option("--cutoff", *cutoff, "Cutoff N")->required()->check(CLI::NonNegativeNumber);
  pi_cmd->add_option("--method", *method, "momentum, grid or kernel")
      ->check(CLI::IsMember({"momentum", "grid", "kernel"}))
      ->capture_default_str();
  pi_cmd->add_option("--grid-size", *grid, "Grid points per axis for the grid method (0: smallest exact)");
  pi_cmd->callback([&ctx, graph, cutoff, method, grid] {
    ctx.action = [&ctx, graph, cutoff, method, grid] {
      no_csv(ctx, "valuation pi");
      const Multigraph g = load_graph(*graph);
      auto opts = ctx.valuation_options();
      opts.grid_size = *grid;
      const auto m = parse_method(*method);
      double value = 0.0;
      std::uint64_t work = 0;
      if (g.vertex_count() > 0 && is_connected(g)) {
        const auto r = pi(g, *cutoff, m, opts);
        value = r.value;
        work = r.work;
      } else {
        Valuator v(*cutoff, m, opts);
        value = v.graph(g);
        work = std::max<std::uint64_t>(v.work(), 1);
      }
      ctx.emit_json("valuation pi", {{"graph", *graph}, {"cutoff", *cutoff}, {"method", *method}, {"grid_size", *grid}},
                    {{"graph", graph_entry(g)}, {"N", *cutoff}, {"method", *method}, {"value", value}, {"work", work}});
      return kOk;
    };
  });

  auto n_min = std::make_shared<int>(0);
  auto n_max = std::make_shared<int>(24);
  auto step = std::make_shared<int>(1);
  auto ct_method = std::make_shared<std::string>("kernel");
  auto* ct = val->add_subcommand("counterterms", "C1..C4 over a range of cutoffs");
  ct->add_option("--n-min", *n_min, "Smallest N")->check(CLI::NonNegativeNumber)->capture_default_str();
  ct->add_option("--n-max", *n_max, "Largest N")->check(CLI::NonNegativeNumber)->capture_default_str();
  ct->add_option("--step", *step, "Step in N")->check(CLI::PositiveNumber)->capture_default_str();
  ct->add_option("--method", *ct_method, "momentum, grid or kernel")
      ->check(CLI::IsMember({"momentum", "grid", "kernel"}))
      ->capture_default_str();
  ct->callback([&ctx, n_min, n_max, step, ct_method] {
    ctx.action = [&ctx, n_min, n_max, step, ct_method] {
      if (*n_min > *n_max) throw UsageError("--n-min exceeds --n-max");
      if (ctx.globals.format == "dot-dir") throw UsageError("counterterms supports json and csv");
      std::vector<int> Ns;
      for (int N = *n_min; N <= *n_max; N += *step) Ns.push_back(N);
      const auto rows = counterterm_scan(Ns, parse_method(*ct_method), ctx.valuation_options());
      if (ctx.globals.format == "csv") {
        *ctx.out << "N,C1,C2,C3,C4\n";
        for (const auto& r : rows) {
          *ctx.out << r.N << ',' << ctx.number(r.c1) << ',' << ctx.number(r.c2) << ',' << ctx.number(r.c3) << ','
                   << ctx.number(r.c4) << '\n';
        }
        return kOk;
      }
      ordered_json out = ordered_json::array();
      for (const auto& r : rows) out.push_back({{"N", r.N}, {"C1", r.c1}, {"C2", r.c2}, {"C3", r.c3}, {"C4", r.c4}});
      ctx.emit_json("valuation counterterms",
                    {{"n_min", *n_min}, {"n_max", *n_max}, {"step", *step}, {"method", *ct_method}},
                    {{"method", *ct_method}, {"rows", out}});
      return kOk;
    };
  });

  auto samples = std::make_shared<std::uint64_t>(100000);
  auto targets = std::make_shared<std::string>("1:0,0:1,2:0,0:2,1:1,2:1");
  auto mc_grid = std::make_shared<int>(0);
  auto* mc = val->add_subcommand("mc", "Free-field Monte-Carlo moments of X and Y against exact diagram values");
  mc->add_option("--cutoff", *cutoff, "Cutoff N")->required()->check(CLI::NonNegativeNumber);
  mc->add_option("--samples", *samples, "Number of samples")->check(CLI::Range(2ULL, 100000000ULL))->capture_default_str();
  mc->add_option("--targets", *targets, "Moments a:b of X^a Y^b, comma separated")->capture_default_str();
  mc->add_option("--grid-size", *mc_grid, "Grid points per axis (0: 4N+1)");
  mc->callback([&ctx, cutoff, samples, targets, mc_grid] {
    ctx.action = [&ctx, cutoff, samples, targets, mc_grid] {
      if (ctx.globals.format == "dot-dir") throw UsageError("mc supports json and csv");
      GffSampleConfig cfg;
      cfg.N = *cutoff;
      cfg.grid_size = *mc_grid;
      cfg.samples = *samples;
      cfg.seed = ctx.globals.seed;
      cfg.threads = ctx.globals.threads;
      const auto t = parse_targets(*targets);
      const auto est = gff_moments(cfg, t);
      Valuator v(*cutoff, ValuationMethod::kernel, ctx.valuation_options());
      std::vector<double> exact;
      for (const auto& e : est) exact.push_back(v.valuate(p0(e.a, e.b)));
      if (ctx.globals.format == "csv") {
        *ctx.out << "a,b,mean,std_error,exact,z\n";
        for (std::size_t i = 0; i < est.size(); ++i) {
          *ctx.out << est[i].a << ',' << est[i].b << ',' << ctx.number(est[i].mean) << ',' << ctx.number(est[i].std_error)
                   << ',' << ctx.number(exact[i]) << ',' << ctx.number((est[i].mean - exact[i]) / est[i].std_error) << '\n';
        }
        return kOk;
      }
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < est.size(); ++i) {
        rows.push_back({{"a", est[i].a},
                        {"b", est[i].b},
                        {"mean", est[i].mean},
                        {"std_error", est[i].std_error},
                        {"exact", exact[i]},
                        {"z", (est[i].mean - exact[i]) / est[i].std_error}});
      }
      const int M = *mc_grid > 0 ? *mc_grid : 4 * *cutoff + 1;
      ctx.emit_json("valuation mc", {{"cutoff", *cutoff}, {"samples", *samples}, {"targets", *targets}, {"grid_size", M}},
                    {{"N", *cutoff}, {"grid_size", M}, {"samples", *samples}, {"seed", ctx.globals.seed}, {"moments", rows}});
      return kOk;
    };
  });

  auto order = std::make_shared<int>(4);
  auto cutoffs = std::make_shared<std::vector<int>>(std::vector<int>{4, 8, 12, 16, 20, 24});
  auto* scan = val->add_subcommand("bphz-scan", "Raw and BPHZ values of the connected X^p classes across cutoffs");
  scan->add_option("--order", *order, "p in 2..4")->check(CLI::Range(2, 4))->capture_default_str();
  scan->add_option("--cutoffs", *cutoffs, "Cutoff list")->delimiter(',')->capture_default_str();
  scan->callback([&ctx, order, cutoffs] {
    ctx.action = [&ctx, order, cutoffs] {
      no_csv(ctx, "valuation bphz-scan");
      const auto s = bphz_boundedness_scan(*order, *cutoffs, ValuationMethod::kernel, ctx.valuation_options());
      auto nullable = [](const std::vector<double>& v) {
        ordered_json a = ordered_json::array();
        for (double x : v) a.push_back(std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr));
        return a;
      };
      ordered_json rows = ordered_json::array();
      for (const auto& r : s.rows) {
        rows.push_back({{"graph", graph_entry(r.graph)},
                        {"degree", r.graph_degree},
                        {"raw", nullable(r.raw)},
                        {"bphz", nullable(r.bphz)},
                        {"top_N", r.top_N},
                        {"previous_N", r.previous_N},
                        {"top_relative_change", r.top_relative_change},
                        {"monotone_blowup", r.monotone_blowup}});
      }
      ordered_json result{{"order", *order}, {"cutoffs", *cutoffs}, {"rows", rows}};
      if (!s.compensated.empty()) result["compensated"] = nullable(s.compensated);
      ctx.emit_json("valuation bphz-scan", {{"order", *order}, {"cutoffs", *cutoffs}}, result);
      return kOk;
    };
  });

  auto eps = std::make_shared<double>(0.1);
  auto series_order = std::make_shared<int>(3);
  auto gamma = std::make_shared<bool>(true);
  auto* logz = val->add_subcommand("log-partition", "Valuated coefficients of -log Z_N in eps");
  logz->add_option("--cutoff", *cutoff, "Cutoff N")->required()->check(CLI::NonNegativeNumber);
  logz->add_option("--order", *series_order, "Order in eps")->check(CLI::Range(2, 5))->capture_default_str();
  logz->add_option("--eps", *eps, "Coupling")->capture_default_str();
  logz->add_flag("!--no-gamma", *gamma, "Leave out the vacuum counterterm");
  logz->callback([&ctx, cutoff, series_order, eps, gamma] {
    ctx.action = [&ctx, cutoff, series_order, eps, gamma] {
      no_csv(ctx, "valuation log-partition");
      const auto series = log_partition_series(*series_order, *gamma);
      Valuator v(*cutoff, ValuationMethod::kernel, ctx.valuation_options());
      const auto coeffs = v.coefficients(series);
      ordered_json symbolic = ordered_json::array();
      for (const auto& c : series.coeffs) symbolic.push_back(cli::to_json(c));
      const auto& ct = v.counterterms();
      ctx.emit_json("valuation log-partition",
                    {{"cutoff", *cutoff}, {"order", *series_order}, {"eps", *eps}, {"gamma", *gamma}},
                    {{"N", *cutoff},
                     {"counterterms", {{"C1", ct.c1}, {"C2", ct.c2}, {"C3", ct.c3}, {"C4", ct.c4}}},
                     {"coefficients", coeffs},
                     {"value", v.valuate(series, *eps)},
                     {"symbolic", symbolic}});
      return kOk;
    };
  });
}

void add_borel(CLI::App& app, Context& ctx) {
  auto* borel = app.add_subcommand("borel", "Zero-dimensional model: asymptotic series, Borel-Pade resummation, Sokal scan");
  borel->require_subcommand(1);

  auto order = std::make_shared<int>(24);
  auto* coeffs = borel->add_subcommand("coeffs", "Asymptotic and Borel coefficients");
  coeffs->add_option("--order", *order, "Number of coefficients")->check(CLI::Range(1, 60))->capture_default_str();
  coeffs->callback([&ctx, order] {
    ctx.action = [&ctx, order] {
      if (ctx.globals.format == "dot-dir") throw UsageError("borel coeffs supports json and csv");
      const auto a = asymptotic_coeffs(*order);
      const auto b = borel_coeffs(*order);
      const int digits = std::max(ctx.globals.precision, 17);
      if (ctx.globals.format == "csv") {
        *ctx.out << "n,a_n,b_n,ratio\n";
        for (int n = 0; n < *order; ++n) {
          const auto i = static_cast<std::size_t>(n);
          *ctx.out << n << ',' << high(a.a[i], digits) << ',' << high(b.b[i], digits) << ',' << ctx.number(borel_ratio(n)) << '\n';
        }
        return kOk;
      }
      ordered_json rows = ordered_json::array();
      for (int n = 0; n < *order; ++n) {
        const auto i = static_cast<std::size_t>(n);
        rows.push_back({{"n", n}, {"a_n", high(a.a[i], digits)}, {"b_n", high(b.b[i], digits)}, {"ratio_next", borel_ratio(n)}});
      }
      ctx.emit_json("borel coeffs", {{"order", *order}}, {{"order", *order}, {"coefficients", rows}});
      return kOk;
    };
  });

  auto eps = std::make_shared<double>(0.1);
  auto rorder = std::make_shared<int>(20);
  auto degrees = std::make_shared<std::vector<int>>();
  auto* resum = borel->add_subcommand("resum", "Pade-Borel value of Z(eps) against direct quadrature");
  resum->add_option("--eps", *eps, "Coupling in (0, 0.5]")->capture_default_str();
  resum->add_option("--order", *rorder, "Number of Borel coefficients")->check(CLI::Range(8, 60))->capture_default_str();
  resum->add_option("--degrees", *degrees, "Pade degrees L,M")->delimiter(',')->expected(2);
  resum->callback([&ctx, eps, rorder, degrees] {
    ctx.action = [&ctx, eps, rorder, degrees] {
      no_csv(ctx, "borel resum");
      std::optional<std::pair<int, int>> deg;
      if (!degrees->empty()) deg = std::make_pair((*degrees)[0], (*degrees)[1]);
      const auto r = pade_borel_detail(*eps, *rorder, deg);
      const double z = z_quadrature(*eps);
      ordered_json args{{"eps", *eps}, {"order", *rorder}};
      if (deg) args["degrees"] = *degrees;
      ctx.emit_json("borel resum", args,
                    {{"eps", *eps},
                     {"order", *rorder},
                     {"L", r.L},
                     {"M", r.M},
                     {"pade_borel", r.value},
                     {"quadrature", z},
                     {"relative_error", std::abs(r.value - z) / z},
                     {"poles", complex_list(r.poles)}});
      return kOk;
    };
  });

  auto n_max = std::make_shared<int>(20);
  auto grid = std::make_shared<std::vector<double>>(std::vector<double>{0.05, 0.1, 0.2});
  auto* sokal = borel->add_subcommand("sokal", "Remainders of the truncated series against the explicit bound");
  sokal->add_option("--n-max", *n_max, "Largest truncation order")->check(CLI::Range(1, 25))->capture_default_str();
  sokal->add_option("--eps", *grid, "Comma-separated couplings")->delimiter(',')->capture_default_str();
  sokal->callback([&ctx, n_max, grid] {
    ctx.action = [&ctx, n_max, grid] {
      if (ctx.globals.format == "dot-dir") throw UsageError("borel sokal supports json and csv");
      const auto rep = sokal_scan(*n_max, *grid);
      if (ctx.globals.format == "csv") {
        *ctx.out << "n,eps,remainder,bound,below_noise,passes\n";
        for (const auto& c : rep.cells) {
          *ctx.out << c.n << ',' << ctx.number(c.eps) << ',' << ctx.number(c.remainder) << ',' << ctx.number(c.bound) << ','
                   << (c.below_noise ? 1 : 0) << ',' << (c.passes ? 1 : 0) << '\n';
        }
      } else {
        ordered_json cells = ordered_json::array();
        for (const auto& c : rep.cells) {
          cells.push_back({{"n", c.n},
                           {"eps", c.eps},
                           {"remainder", c.remainder},
                           {"bound", c.bound},
                           {"below_noise", c.below_noise},
                           {"passes", c.passes}});
        }
        ctx.emit_json("borel sokal", {{"n_max", *n_max}, {"eps", *grid}},
                      {{"pass", rep.pass}, {"C", rep.C}, {"r", rep.r}, {"cells", cells}});
      }
      return rep.pass ? kOk : kVerificationFailed;
    };
  });

  auto rn = std::make_shared<int>(2);
  auto cutoff = std::make_shared<int>(1);
  auto rgrid = std::make_shared<std::vector<double>>(std::vector<double>{0.05, 0.1, 0.2});
  auto samples = std::make_shared<std::uint64_t>(20000);
  auto* rem = borel->add_subcommand("remainder", "Cauchy-Schwarz remainder bound for the 3d model at small n and N");
  rem->add_option("--n-max", *rn, "Largest n (<= 3)")->check(CLI::Range(1, 3))->capture_default_str();
  rem->add_option("--cutoff", *cutoff, "Cutoff N (<= 2)")->check(CLI::Range(0, 2))->capture_default_str();
  rem->add_option("--eps", *rgrid, "Comma-separated couplings")->delimiter(',')->capture_default_str();
  rem->add_option("--samples", *samples, "Monte-Carlo samples")->check(CLI::Range(2ULL, 100000000ULL))->capture_default_str();
  rem->callback([&ctx, rn, cutoff, rgrid, samples] {
    ctx.action = [&ctx, rn, cutoff, rgrid, samples] {
      no_csv(ctx, "borel remainder");
      GffSampleConfig mc;
      mc.samples = *samples;
      mc.seed = ctx.globals.seed;
      mc.threads = ctx.globals.threads;
      const auto s = phi43_remainder_scan(*rn, *cutoff, *rgrid, mc, ValuationMethod::kernel, ctx.valuation_options());
      ordered_json cells = ordered_json::array();
      for (const auto& c : s.cells) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : c.terms) {
          terms.push_back({{"q", t.q},
                           {"prefactor", t.prefactor},
                           {"moment", t.moment},
                           {"r_factor", t.r_factor},
                           {"contribution", t.contribution}});
        }
        cells.push_back({{"n", c.n},
                         {"eps", c.eps},
                         {"bound", c.bound},
                         {"mc_mean", c.mc_mean},
                         {"mc_std_error", c.mc_std_error},
                         {"terms", terms}});
      }
      ctx.emit_json("borel remainder", {{"n_max", *rn}, {"cutoff", *cutoff}, {"eps", *rgrid}, {"samples", *samples}},
                    {{"N", s.N},
                     {"C1", s.c1},
                     {"C2", s.c2},
                     {"surrogate", s.surrogate},
                     {"seed", s.mc.seed},
                     {"samples", s.mc.samples},
                     {"cells", cells}});
      return kOk;
    };
  });
}

}  // namespace

void add_numeric_commands(CLI::App& app, Context& ctx) {
  add_valuation(app, ctx);
  add_borel(app, ctx);
}

}  // namespace phi4::cli
