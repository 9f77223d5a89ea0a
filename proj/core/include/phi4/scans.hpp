#pragma once

#include <string>
#include <vector>

#include "phi4/multigraph.hpp"
#include "phi4/valuation.hpp"

namespace phi4 {

// Least-squares line y = slope x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

// Regression test for growth like N: a linear fit over all points with
// R^2 >= r2_min, and the slope fitted on the upper half of the N values within
// slope_tolerance (relative) of the full-range slope.
struct LinearGrowth {
  LinearFit fit;
  LinearFit top_half;
  double slope_deviation = 0.0;
  bool passes = false;
};
LinearGrowth linear_growth(const std::vector<int>& Ns, const std::vector<double>& values, double r2_min = 0.99,
                           double slope_tolerance = 0.15);

// Regression test for growth like log N: fit against log N with R^2 >= r2_min
// and a positive slope.
struct LogGrowth {
  LinearFit fit;
  bool passes = false;
};
LogGrowth log_growth(const std::vector<int>& Ns, const std::vector<double>& values, double r2_min = 0.98);

std::vector<Counterterms> counterterm_scan(const std::vector<int>& Ns, ValuationMethod method = ValuationMethod::kernel,
                                           const ValuationOptions& opts = {});

struct BphzScanRow {
  Multigraph graph;  // connected class of p(p, 0)
  std::string key;   // canonical key, hex
  int graph_degree = 0;
  // Per N; NaN where the valuation exceeds the work budget.
  std::vector<double> raw;
  std::vector<double> bphz;
  // The two largest N with a finite BPHZ value (-1 if fewer than two).
  int top_N = -1;
  int previous_N = -1;
  double top_relative_change = 0.0;  // of bphz between previous_N and top_N
  bool monotone_blowup = false;      // finite bphz strictly increasing, top change >= 5%
};

struct BphzScan {
  int order = 0;
  std::vector<int> Ns;
  std::vector<BphzScanRow> rows;
  // p in {2, 3}: the eps^p coefficient of the log-partition series with the
  // vacuum counterterm gamma included, valuated per N.
  std::vector<double> compensated;
};

// Pre: 2 <= p <= 4. Cells over the work budget are recorded as NaN.
BphzScan bphz_boundedness_scan(int p, const std::vector<int>& Ns, ValuationMethod method = ValuationMethod::kernel,
                               const ValuationOptions& opts = {});

}  // namespace phi4
