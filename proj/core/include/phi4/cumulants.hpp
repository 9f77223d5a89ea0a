#pragma once

#include <compare>
#include <map>

#include "phi4/diagram_sum.hpp"
#include "phi4/power_series.hpp"
#include "phi4/wick.hpp"

namespace phi4 {

// alpha^alpha_pow beta^beta_pow.
struct ScalarSignature {
  int alpha_pow = 0;
  int beta_pow = 0;

  auto operator<=>(const ScalarSignature&) const = default;
};

// Finite sum  sum c * alpha^i beta^j * Gamma, grouped by (i, j).
class GradedSum {
 public:
  using Map = std::map<ScalarSignature, DiagramSum>;

  void add(ScalarSignature sig, const DiagramSum& s, const Rational& scale = 1);
  void add(const GradedSum& o, const Rational& scale = 1);

  const DiagramSum& part(ScalarSignature sig) const;
  bool empty() const noexcept { return parts_.empty(); }
  Map::const_iterator begin() const { return parts_.begin(); }
  Map::const_iterator end() const { return parts_.end(); }

  bool all_connected() const;
  bool operator==(const GradedSum&) const = default;

  static GradedSum one();

 private:
  Map parts_;
};

// Convolution of signatures and disjoint union of diagrams.
GradedSum product(const GradedSum& a, const GradedSum& b);
GradedSum scaled(const GradedSum& a, const Rational& s);

struct CumulantConfig {
  int max_order = 6;
  WickConfig wick;
};

// mu_n = (-1)^n sum_m C(n,m) alpha^m beta^(n-m) p0(m, n-m), i.e. the n-th
// moment of -(alpha X + beta Y). mu_0 = 1 and mu_1 = 0.
GradedSum moment(int n, const CumulantConfig& cfg = {});

// Cumulants from moments by the moment-cumulant recursion
//   kappa_n = mu_n - sum_{m=2}^{n-2} C(n-1, m-1) kappa_m mu_{n-m}.
// Throws InternalError if a disconnected class survives.
GradedSum cumulant(int n, const CumulantConfig& cfg = {});

// The same cumulant assembled from connected matchings only.
GradedSum cumulant_direct(int n, const CumulantConfig& cfg = {});

// Monomial C2^c2 C3^c3 C4^c4 in the counterterm symbols.
struct CountertermSymbols {
  int c2 = 0;
  int c3 = 0;
  int c4 = 0;

  auto operator<=>(const CountertermSymbols&) const = default;
};

// Coefficient of one power of epsilon: diagram sums weighted by counterterm
// monomials. The unit graph carries pure constants.
struct SymbolicCoefficient {
  std::map<CountertermSymbols, DiagramSum> terms;

  void add(CountertermSymbols sym, const DiagramSum& s, const Rational& scale = 1);
  bool is_zero() const { return terms.empty(); }
  SymbolicCoefficient& operator+=(const SymbolicCoefficient& o);
  bool operator==(const SymbolicCoefficient&) const = default;
};

// -log E[exp(-alpha X - beta Y - gamma)] = gamma - sum_n kappa_n / n! with
// alpha = eps/4, beta = eps^2 C2 / 2, gamma = eps^2 C3 - eps^3 C4, truncated at
// eps^order.
PowerSeries<SymbolicCoefficient> log_partition_series(int order, bool include_gamma,
                                                      const CumulantConfig& cfg = {});

}  // namespace phi4
