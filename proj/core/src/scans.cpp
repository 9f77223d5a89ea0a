#include "phi4/scans.hpp"

#include <cmath>
#include <limits>

#include "phi4/cumulants.hpp"
#include "phi4/error.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/valuator.hpp"
#include "phi4/wick.hpp"

namespace phi4 {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("fit needs at least two paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit needs distinct abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

LinearGrowth linear_growth(const std::vector<int>& Ns, const std::vector<double>& values, double r2_min,
                           double slope_tolerance) {
  if (Ns.size() < 4) throw InvalidArgument("growth test needs at least four cutoffs");
  const std::vector<double> x(Ns.begin(), Ns.end());
  LinearGrowth g;
  g.fit = fit_linear(x, values);
  const std::size_t lo = Ns.size() / 2;
  g.top_half = fit_linear(std::vector<double>(x.begin() + static_cast<long>(lo), x.end()),
                          std::vector<double>(values.begin() + static_cast<long>(lo), values.end()));
  g.slope_deviation = std::abs(g.top_half.slope - g.fit.slope) / std::abs(g.fit.slope);
  g.passes = g.fit.slope > 0.0 && g.fit.r2 >= r2_min && g.slope_deviation <= slope_tolerance;
  return g;
}

LogGrowth log_growth(const std::vector<int>& Ns, const std::vector<double>& values, double r2_min) {
  std::vector<double> x;
  for (int N : Ns) {
    if (N <= 0) throw InvalidArgument("log growth needs positive cutoffs");
    x.push_back(std::log(static_cast<double>(N)));
  }
  LogGrowth g;
  g.fit = fit_linear(x, values);
  g.passes = g.fit.slope > 0.0 && g.fit.r2 >= r2_min;
  return g;
}

std::vector<Counterterms> counterterm_scan(const std::vector<int>& Ns, ValuationMethod method,
                                           const ValuationOptions& opts) {
  std::vector<Counterterms> out;
  out.reserve(Ns.size());
  for (int N : Ns) out.push_back(counterterms(N, method, opts));
  return out;
}

BphzScan bphz_boundedness_scan(int order, const std::vector<int>& Ns, ValuationMethod method,
                               const ValuationOptions& opts) {
  if (order < 2 || order > 4) throw InvalidArgument("bphz scan supports orders 2..4");
  if (Ns.empty()) throw InvalidArgument("empty cutoff list");
  BphzScan scan;
  scan.order = order;
  scan.Ns = Ns;

  const DiagramSum classes = p(order, 0);
  std::vector<BphzReduction> reductions;
  for (const auto& [key, term] : classes) {
    BphzScanRow row;
    row.graph = term.graph;
    row.key = key.hex();
    row.graph_degree = degree(term.graph);
    scan.rows.push_back(std::move(row));
    reductions.push_back(bphz_reduce(term.graph));
  }

  PowerSeries<SymbolicCoefficient> series;
  if (order <= 3) series = log_partition_series(order, true);

  for (int N : Ns) {
    Valuator val(N, method, opts);
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      double raw = kNaN;
      double bphz = kNaN;
      try {
        raw = val.graph(scan.rows[i].graph);
        bphz = val.valuate(reductions[i]);
      } catch (const BudgetExceeded&) {
      }
      scan.rows[i].raw.push_back(raw);
      scan.rows[i].bphz.push_back(bphz);
    }
    if (order <= 3) scan.compensated.push_back(val.valuate(series[order]));
  }

  for (auto& row : scan.rows) {
    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < row.bphz.size(); ++i) {
      if (std::isfinite(row.bphz[i])) finite.push_back(i);
    }
    if (finite.size() < 2) continue;
    const std::size_t last = finite[finite.size() - 1];
    const std::size_t prev = finite[finite.size() - 2];
    row.top_N = Ns[last];
    row.previous_N = Ns[prev];
    row.top_relative_change = std::abs(row.bphz[last] - row.bphz[prev]) / std::abs(row.bphz[prev]);
    bool increasing = true;
    for (std::size_t i = 1; i < finite.size(); ++i) increasing = increasing && row.bphz[finite[i]] > row.bphz[finite[i - 1]];
    row.monotone_blowup = increasing && row.top_relative_change >= 0.05;
  }
  return scan;
}

}  // namespace phi4
