#pragma once

#include <string>
#include <vector>

#include "phi4/gff.hpp"
#include "phi4/valuation.hpp"

namespace phi4 {

// One q-term of the Cauchy-Schwarz bound on |E[R_n]|.
struct RemainderTerm {
  int q = 0;
  double prefactor = 0.0;  // |alpha|^(n-2q) |beta|^q / ((n-2q)! q!)
  double moment = 0.0;     // E[X^(2(n-2q)) Y^(2q)] = Pi_N(p0(2(n-2q), 2q))
  double r_factor = 0.0;   // surrogate bound on sqrt(E[r_nq^2])
  double contribution = 0.0;
};

struct RemainderCell {
  int n = 0;
  double eps = 0.0;
  std::vector<RemainderTerm> terms;
  double bound = 0.0;
  double mc_mean = 0.0;  // E[R_n] from GFF samples
  double mc_std_error = 0.0;
};

struct RemainderScan {
  int N = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  GffSampleConfig mc;
  std::string surrogate;  // how sqrt(E[r_nq^2]) was bounded
  std::vector<RemainderCell> cells;
};

// R_n = exp(-alpha X - beta Y) minus its Taylor terms of eps-order below n,
// with alpha = eps/4, beta = eps^2 C2 / 2. Pre: 1 <= n_max <= 3, 0 <= N <= 2.
RemainderScan phi43_remainder_scan(int n_max, int N, const std::vector<double>& eps_grid, const GffSampleConfig& mc,
                                   ValuationMethod method = ValuationMethod::kernel, const ValuationOptions& opts = {});

}  // namespace phi4
