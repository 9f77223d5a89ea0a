#include "phi4/remainder_scan.hpp"

#include <cmath>

#include "phi4/error.hpp"
#include "phi4/rational.hpp"
#include "phi4/valuator.hpp"
#include "phi4/wick.hpp"

namespace phi4 {

namespace {

double fact(int n) { return factorial(static_cast<unsigned>(n)).get_d(); }

// exp(-V) minus the Taylor terms (-alpha X)^j (-beta Y)^q / (j! q!) with j + 2q < n.
double remainder(double alpha, double beta, const XYSample& s, int n) {
  const double a = -alpha * s.x;
  const double b = -beta * s.y;
  double r = std::exp(a + b);
  for (int q = 0; 2 * q < n; ++q) {
    for (int j = 0; j + 2 * q < n; ++j) r -= std::pow(a, j) * std::pow(b, q) / (fact(j) * fact(q));
  }
  return r;
}

}  // namespace

RemainderScan phi43_remainder_scan(int n_max, int N, const std::vector<double>& eps_grid, const GffSampleConfig& mc,
                                   ValuationMethod method, const ValuationOptions& opts) {
  if (n_max < 1 || n_max > 3) throw InvalidArgument("remainder scan supports n <= 3");
  if (N < 0 || N > 2) throw InvalidArgument("remainder scan supports N <= 2");
  RemainderScan scan;
  scan.N = N;
  scan.mc = mc;
  scan.mc.N = N;
  Valuator val(N, method, opts);
  const auto& ct = val.counterterms();
  scan.c1 = ct.c1;
  scan.c2 = ct.c2;
  // X >= -6 C^2 pointwise (minimum of u^2 - 6Cu + 3C^2 at u = 3C) and Y >= -C,
  // so every Taylor remainder weight is at most exp(6 alpha C^2 + beta C).
  scan.surrogate = "sqrt(E[r^2]) <= exp(6 alpha C1^2 + beta C1), from X >= -6 C1^2 and Y >= -C1";

  if (scan.mc.samples < 2) throw InvalidArgument("remainder scan needs at least two samples");
  const auto samples = gff_samples(scan.mc);
  std::vector<double> values(samples.size());
  for (double eps : eps_grid) {
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
    const double alpha = eps / 4.0;
    const double beta = 0.5 * eps * eps * ct.c2;
    const double r_factor = std::exp(6.0 * alpha * ct.c1 * ct.c1 + beta * ct.c1);
    for (int n = 1; n <= n_max; ++n) {
      RemainderCell cell;
      cell.n = n;
      cell.eps = eps;
      for (int q = 0; 2 * q <= n; ++q) {
        RemainderTerm t;
        t.q = q;
        t.prefactor = std::pow(alpha, n - 2 * q) * std::pow(beta, q) / (fact(n - 2 * q) * fact(q));
        t.moment = val.valuate(p0(2 * (n - 2 * q), 2 * q));
        t.r_factor = r_factor;
        t.contribution = t.prefactor * std::sqrt(std::max(t.moment, 0.0)) * t.r_factor;
        cell.bound += t.contribution;
        cell.terms.push_back(t);
      }
      for (std::size_t i = 0; i < samples.size(); ++i) values[i] = remainder(alpha, beta, samples[i], n);
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      var /= static_cast<double>(values.size() - 1);
      cell.mc_mean = mean;
      cell.mc_std_error = std::sqrt(var / static_cast<double>(values.size()));
      scan.cells.push_back(std::move(cell));
    }
  }
  return scan;
}

}  // namespace phi4
