#pragma once

#include <functional>
#include <string>
#include <vector>

namespace phi4::acceptance {

enum class Level { fast, full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(Level)> run;
};

const std::vector<Criterion>& criteria();

// Runs every criterion (or only `only`, if non-empty); exceptions become
// failures. `on_result` sees each result as soon as it is available.
std::vector<CriterionResult> run_all(Level level, const std::vector<int>& only = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);

}  // namespace phi4::acceptance
