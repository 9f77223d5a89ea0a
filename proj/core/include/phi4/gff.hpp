#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace phi4 {

struct GffSampleConfig {
  int N = 2;
  int grid_size = 0;  // M; 0 selects 4N + 1
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  int threads = 1;
};

// Wick observables of one field sample.
struct XYSample {
  double x = 0.0;  // grid mean of phi^4 - 6 C phi^2 + 3 C^2
  double y = 0.0;  // grid mean of phi^2 - C
};

// One (X, Y) pair per sample, in sample order. Sample i draws from its own
// generator seeded by (seed, i), so the output does not depend on `threads`.
// Throws InvalidArgument if M < 4N + 1.
std::vector<XYSample> gff_samples(const GffSampleConfig& cfg);

struct MomentEstimate {
  int a = 0;
  int b = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

// Sample mean and standard error of X^a Y^b for each target (a, b).
std::vector<MomentEstimate> moments_from_samples(const std::vector<XYSample>& samples,
                                                 const std::vector<std::pair<int, int>>& targets);
std::vector<MomentEstimate> gff_moments(const GffSampleConfig& cfg, const std::vector<std::pair<int, int>>& targets);

}  // namespace phi4
