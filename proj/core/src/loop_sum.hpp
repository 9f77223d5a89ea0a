#pragma once

#include <cstdint>
#include <vector>

#include "kernel.hpp"

namespace phi4::detail {

struct LoopEdge {
  int u = 0;
  int v = 0;
  const FourierKernel* kernel = nullptr;
};

struct LoopSumResult {
  double value = 0.0;
  std::uint64_t work = 0;
};

// Upper bound on the number of summands: product of chord ball sizes.
double loop_sum_estimate(int vertex_count, const std::vector<LoopEdge>& edges);

// Momentum-space evaluation of the torus integral of prod_e K_e(x_u - x_v)
// over a connected graph: loop momenta run over the support balls of the chord
// kernels, tree momenta follow from conservation and are discarded when they
// leave their kernel's support. Throws BudgetExceeded when the estimate or the
// running count exceeds `budget`. The result is independent of `threads`.
LoopSumResult loop_sum(int vertex_count, const std::vector<LoopEdge>& edges, std::uint64_t budget, int threads);

}  // namespace phi4::detail
