#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "phi4/cumulants.hpp"
#include "phi4/diagram_sum.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/power_series.hpp"
#include "phi4/valuation.hpp"

namespace phi4 {

// Numeric values for the coupling shorthands.
struct Bindings {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // alpha = eps/4, beta = eps^2 C2 / 2, gamma = eps^2 C3 - eps^3 C4.
  static Bindings from_eps(double eps, const Counterterms& ct);
};

// Linear, multiplicative extension of Pi_N at a fixed cutoff. Values of
// connected classes are cached by canonical key. Not thread-safe.
class Valuator {
 public:
  explicit Valuator(int N, ValuationMethod method = ValuationMethod::kernel, ValuationOptions opts = {});

  int cutoff() const noexcept { return N_; }
  ValuationMethod method() const noexcept { return method_; }

  // Product over connected components; the empty graph has value 1.
  double graph(const Multigraph& g);
  double bubble() { return graph(diagrams::bubble()); }
  const Counterterms& counterterms();

  double valuate(const DiagramSum& s);
  // Substitutes the numeric bubble value for each bubble power.
  double valuate(const BphzReduction& r);
  // Throws UnboundSymbol when a term carries alpha or beta and no bindings are given.
  double valuate(const GradedSum& s, const std::optional<Bindings>& b = std::nullopt);
  // Counterterm symbols are bound to this cutoff's counterterms.
  double valuate(const SymbolicCoefficient& c);
  // Coefficientwise, then summed at eps.
  std::vector<double> coefficients(const PowerSeries<SymbolicCoefficient>& s);
  double valuate(const PowerSeries<SymbolicCoefficient>& s, double eps);

  std::uint64_t work() const noexcept { return work_; }
  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  double connected(const Multigraph& g);

  int N_;
  ValuationMethod method_;
  ValuationOptions opts_;
  std::unordered_map<CanonicalKey, double> cache_;
  std::optional<Counterterms> ct_;
  std::uint64_t work_ = 0;
};

}  // namespace phi4
