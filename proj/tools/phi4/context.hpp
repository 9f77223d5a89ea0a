#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "phi4/valuation.hpp"

namespace phi4::cli {

inline constexpr const char* kSchema = "phi4-hopf/1";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Globals {
  std::uint64_t seed = 42;
  std::uint64_t work_budget = default_work_budget();
  int threads = 1;
  std::string format = "json";
  std::string out;  // directory for dot-dir, otherwise unused
  int precision = 17;
  bool deterministic = false;
};

struct Context {
  Globals globals;
  std::ostream* out = nullptr;
  // Set by the selected subcommand; returns the exit code.
  std::function<int()> action;

  ValuationOptions valuation_options() const;
  ordered_json config(const std::string& command, ordered_json args) const;
  // Writes the versioned envelope to the output stream.
  void emit_json(const std::string& command, ordered_json args, ordered_json result) const;
  std::string number(double v) const;
};

void add_algebra_commands(CLI::App& app, Context& ctx);
void add_numeric_commands(CLI::App& app, Context& ctx);
void add_verify_command(CLI::App& app, Context& ctx);

// Raised for option combinations CLI11 cannot check by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phi4::cli
