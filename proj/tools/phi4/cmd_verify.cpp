#include <iostream>

#include "acceptance.hpp"
#include "context.hpp"

namespace phi4::cli {

void add_verify_command(CLI::App& app, Context& ctx) {
  auto level = std::make_shared<std::string>("fast");
  auto only = std::make_shared<std::vector<int>>();
  auto* cmd = app.add_subcommand("verify-all", "Run the acceptance criteria");
  cmd->add_option("--level", *level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  cmd->add_option("--only", *only, "Criterion ids to run")->delimiter(',');
  cmd->callback([&ctx, level, only] {
    ctx.action = [&ctx, level, only] {
      if (ctx.globals.format == "dot-dir") throw UsageError("verify-all supports json and csv");
      const auto lv = *level == "full" ? acceptance::Level::full : acceptance::Level::fast;
      const bool json = ctx.globals.format == "json";
      if (!json) *ctx.out << "id,name,passed,seconds,detail\n";
      const auto results = acceptance::run_all(lv, *only, [&](const acceptance::CriterionResult& r) {
        std::cerr << acceptance::format_line(r) << '\n';
        if (!json) {
          std::string detail = r.detail;
          for (auto& ch : detail) {
            if (ch == '"') ch = '\'';
          }
          *ctx.out << r.id << ',' << r.name << ',' << (r.passed ? 1 : 0) << ',' << ctx.number(r.seconds) << ",\"" << detail
                   << "\"\n";
        }
      });
      bool all = !results.empty();
      for (const auto& r : results) all = all && r.passed;
      if (json) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : results) {
          ordered_json row{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
          if (!ctx.globals.deterministic) row["seconds"] = r.seconds;
          rows.push_back(std::move(row));
        }
        ctx.emit_json("verify-all", {{"level", *level}, {"only", *only}}, {{"level", *level}, {"all_passed", all}, {"criteria", rows}});
      }
      return all ? kOk : kVerificationFailed;
    };
  });
}

}  // namespace phi4::cli
