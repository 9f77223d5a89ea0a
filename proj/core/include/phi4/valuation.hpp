#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "phi4/cutoff.hpp"
#include "phi4/multigraph.hpp"

namespace phi4 {

enum class ValuationMethod {
  momentum,  // loop momenta over K_N, tree momenta filtered by membership
  grid,      // exact trapezoidal quadrature over vertex positions
  kernel,    // series-parallel reduction with FFT-based kernels
};

std::string_view to_string(ValuationMethod m);
ValuationMethod parse_method(std::string_view s);

struct ValuationResult {
  double value = 0.0;
  ValuationMethod method = ValuationMethod::momentum;
  int N = 0;
  std::uint64_t work = 0;  // summand or grid-point evaluations
};

// PHI4_WORK_BUDGET if set, else 10^9.
std::uint64_t default_work_budget();

struct ValuationOptions {
  std::uint64_t work_budget = default_work_budget();
  int grid_size = 0;  // pi_grid only; 0 selects min_grid_size
  int threads = 1;
};

// Smallest grid on which pi_grid is exact: max(4N, d N) + 1 with d the
// largest vertex degree.
int min_grid_size(const Multigraph& g, int N);

// Pi_N of a connected graph. The single vertex has value 1.
ValuationResult pi_momentum(const Multigraph& g, int N, const ValuationOptions& opts = {});
ValuationResult pi_grid(const Multigraph& g, int N, const ValuationOptions& opts = {});
ValuationResult pi_kernel(const Multigraph& g, int N, const ValuationOptions& opts = {});
ValuationResult pi(const Multigraph& g, int N, ValuationMethod method, const ValuationOptions& opts = {});

struct Counterterms {
  int N = 0;
  double c1 = 0.0;  // sum_{K_N} 1/(lambda+1)
  double c2 = 0.0;  // 6 Pi_N(bubble)
  double c3 = 0.0;  // 3/4 Pi_N(two vertices, four edges)
  double c4 = 0.0;  // 9/2 Pi_N(double triangle)
};

Counterterms counterterms(int N, ValuationMethod method = ValuationMethod::kernel,
                          const ValuationOptions& opts = {});

}  // namespace phi4
