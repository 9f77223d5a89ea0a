#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "context.hpp"
#include "phi4/error.hpp"

namespace phi4::cli {

ValuationOptions Context::valuation_options() const {
  ValuationOptions o;
  o.work_budget = globals.work_budget;
  o.threads = globals.threads;
  return o;
}

ordered_json Context::config(const std::string& command, ordered_json args) const {
  return {{"command", command},
          {"args", std::move(args)},
          {"seed", globals.seed},
          {"work_budget", globals.work_budget},
          {"threads", globals.threads},
          {"format", globals.format},
          {"precision", globals.precision},
          {"deterministic", globals.deterministic}};
}

void Context::emit_json(const std::string& command, ordered_json args, ordered_json result) const {
  ordered_json doc{{"schema", kSchema}, {"config", config(command, std::move(args))}};
  if (!globals.deterministic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ts;
    ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    doc["timestamp"] = ts.str();
  }
  doc["result"] = std::move(result);
  *out << doc.dump(2) << '\n';
}

std::string Context::number(double v) const {
  std::ostringstream s;
  s << std::setprecision(globals.precision) << v;
  return s.str();
}

}  // namespace phi4::cli

int main(int argc, char** argv) {
  using namespace phi4::cli;
  Context ctx;
  ctx.out = &std::cout;
  ctx.globals.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Perturbative phi^4_3 toolkit: diagram combinatorics, Hopf renormalisation, cutoff valuations, Borel resummation"};
  app.fallthrough();
  app.require_subcommand(1);
  auto& g = ctx.globals;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--work-budget", g.work_budget, "Maximum summand evaluations per valuation (env PHI4_WORK_BUDGET)")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot-dir"}))->capture_default_str();
  app.add_option("--out", g.out, "Output directory for --format dot-dir");
  app.add_option("--precision", g.precision, "Significant digits in CSV output")->check(CLI::Range(1, 40))->capture_default_str();
  app.add_flag("--deterministic", g.deterministic, "Omit the timestamp so identical runs give identical output");
  bool as_json = false;
  bool as_csv = false;
  app.add_flag("--json", as_json, "Shorthand for --format json");
  app.add_flag("--csv", as_csv, "Shorthand for --format csv");

  add_algebra_commands(app, ctx);
  add_numeric_commands(app, ctx);
  add_verify_command(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (as_json && as_csv) {
    std::cerr << "usage error: --json and --csv are exclusive\n";
    return kUsage;
  }
  if (as_json) g.format = "json";
  if (as_csv) g.format = "csv";
  try {
    return ctx.action ? ctx.action() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const phi4::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}
