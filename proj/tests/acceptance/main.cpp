#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"

// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.
int main(int argc, char** argv) {
  using namespace phi4::acceptance;
  Level level = Level::fast;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      level = Level::full;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: phi4_acceptance [--full] [--only ID]...\n";
      return 2;
    }
  }
  int failed = 0;
  const auto results = run_all(level, only, [&](const CriterionResult& r) {
    std::cout << format_line(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
