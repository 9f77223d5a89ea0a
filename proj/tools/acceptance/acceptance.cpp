#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

#include "phi4/borel.hpp"
#include "phi4/commutativity.hpp"
#include "phi4/cumulants.hpp"
#include "phi4/gff.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/hopf_poly.hpp"
#include "phi4/scans.hpp"
#include "phi4/valuation.hpp"
#include "phi4/valuator.hpp"
#include "phi4/wick.hpp"

namespace phi4::acceptance {

namespace {

std::string strf(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  char buf[2048];
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

// Cutoffs of the counterterm and BPHZ regressions.
const std::vector<int> kScanCutoffs{4, 8, 12, 16, 20, 24};

Multigraph fgii() { return diagrams::banana(2); }
Multigraph fgiii() { return diagrams::bubble(); }
Multigraph fgiv() { return diagrams::banana(4); }
Multigraph fgvi() { return diagrams::double_triangle(); }
Multigraph fgiii_plus() { return diagrams::bubble_with_tail(); }
// X Y Y: the X vertex joined twice to each Y.
Multigraph cherry() { return Multigraph(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}}); }

GradedSum graded(std::initializer_list<std::tuple<int, int, Multigraph, long>> terms) {
  GradedSum s;
  for (const auto& [a, b, g, c] : terms) s.add({a, b}, DiagramSum::single(g, Rational(c)));
  return s;
}

bool has_disconnected(const GradedSum& s) { return !s.all_connected(); }

CriterionResult coefficients(Level) {
  CriterionResult r;
  const GradedSum mu2 = moment(2);
  const bool mu2_ok = mu2 == graded({{2, 0, fgiv(), 24}, {0, 2, fgii(), 2}});

  const GradedSum mu3 = moment(3);
  const bool mu3_ok =
      mu3 == graded({{3, 0, fgvi(), -1728}, {2, 1, fgiii_plus(), -576}, {1, 2, cherry(), -72}, {0, 3, diagrams::triangle(), -8}});

  const GradedSum mu4 = moment(4);
  const GradedSum k4 = cumulant(4);
  GradedSum rhs4 = mu4;
  rhs4.add(product(mu2, mu2), -3);
  const Rational disc = mu4.part({4, 0}).coefficient(disjoint_union(fgiv(), fgiv()));
  const bool k4_ok = k4 == rhs4 && disc == 3 * 24 * 24 && k4.part({4, 0}).coefficient(disjoint_union(fgiv(), fgiv())) == 0 &&
                     !has_disconnected(k4);

  const GradedSum k5 = cumulant(5);
  GradedSum rhs5 = moment(5);
  rhs5.add(product(mu2, mu3), -10);
  const bool k5_ok = k5 == rhs5 && !has_disconnected(k5);

  r.passed = mu2_ok && mu3_ok && k4_ok && k5_ok;
  r.detail = strf("mu2 %s, mu3 {1728,576,72,8} %s, kappa4 (disconnected 3*24^2=%s cancels) %s, kappa5 %s",
                  mu2_ok ? "ok" : "MISMATCH", mu3_ok ? "ok" : "MISMATCH", to_string(disc).c_str(),
                  k4_ok ? "ok" : "MISMATCH", k5_ok ? "ok" : "MISMATCH");
  return r;
}

CriterionResult connectedness(Level level) {
  CriterionResult r;
  const int top = level == Level::full ? 5 : 4;
  r.passed = true;
  std::string bad;
  for (int n = 2; n <= top; ++n) {
    const GradedSum k = cumulant(n);
    const bool ok = k == cumulant_direct(n) && k.all_connected();
    if (!ok) bad += strf(" n=%d", n);
    r.passed = r.passed && ok;
  }
  r.detail = strf("cumulant == connected projection and connected for n <= %d%s", top,
                  bad.empty() ? "" : (", failing:" + bad).c_str());
  return r;
}

CriterionResult hopf(Level) {
  CriterionResult r;
  const Multigraph g = fgiii_plus();
  GraphTensorSum expected;
  expected.add(g, Multigraph(), 1);
  expected.add(Multigraph(), g, 1);
  expected.add(fgiii(), fgii(), 1);
  const bool delta_ok = coproduct(g) == expected;
  const DiagramSum anti_expected = DiagramSum::single(g, -1) + DiagramSum::single(disjoint_union(fgiii(), fgii()));
  const bool anti_ok = antipode(g) == anti_expected;

  int classes = 0;
  int forest_bad = 0;
  int coassoc_bad = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [sig, s] : cumulant(n)) {
      for (const auto& [key, term] : s) {
        ++classes;
        if (!(antipode(term.graph) == forest_antipode(term.graph))) ++forest_bad;
        if (!coassociative(term.graph)) ++coassoc_bad;
      }
    }
  }
  r.passed = delta_ok && anti_ok && forest_bad == 0 && coassoc_bad == 0;
  r.detail = strf("worked example: coproduct %s, antipode %s; %d cumulant classes: forest mismatches %d, "
                  "coassociativity failures %d",
                  delta_ok ? "ok" : "MISMATCH", anti_ok ? "ok" : "MISMATCH", classes, forest_bad, coassoc_bad);
  return r;
}

CriterionResult commutative_diagram(Level) {
  CriterionResult r;
  bool all = true;
  std::string rows;
  for (int n = 2; n <= 4; ++n) {
    const auto rep = verify_commutativity(n);
    all = all && rep.all_equal;
    rows += strf(" n=%d:%s", n, rep.all_equal ? "ok" : "MISMATCH");
  }
  const auto mixed = verify_mixed({2, 1});
  PolyDiagramSum target;
  target.add(DiagramSum::single(fgiii_plus(), 192), Rational(1));
  target.add(DiagramSum::single(fgii(), 192), ScalarPoly::eta_power(1, Rational(-1, 48)));
  const bool mixed_ok = mixed.equal && mixed.lhs == target;
  r.passed = all && mixed_ok;
  r.detail = "combinatorial identity" + rows + strf("; X^2 Y gives 192(FGIII+ - (eta/48) FGII): %s", mixed_ok ? "ok" : "MISMATCH");
  return r;
}

CriterionResult exp_deformation(Level) {
  CriterionResult r;
  const auto lhs = exp_deform(12);
  const auto rhs = exp_target(12);
  r.passed = lhs == rhs;
  r.detail = strf("(M o chi_eta) exp(-alpha X) vs exp(-alpha X - beta Y) to order 12: %zu monomials, %s", rhs.size(),
                  r.passed ? "equal" : "MISMATCH");
  return r;
}

CriterionResult valuation_cross_check(Level) {
  CriterionResult r;
  const std::vector<std::pair<const char*, Multigraph>> graphs{
      {"FGII", fgii()}, {"bubble", fgiii()}, {"FGIV", fgiv()}, {"FGIII+", fgiii_plus()}, {"FGVI", fgvi()}};
  double worst = 0.0;
  for (const auto& [name, g] : graphs) {
    const double a = pi_momentum(g, 2).value;
    const double b = pi_grid(g, 2).value;
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  r.passed = worst <= 1e-10;
  r.detail = strf("max relative |momentum - grid| at N=2 over 5 graphs: %.2e (tolerance 1e-10)", worst);
  return r;
}

CriterionResult counterterm_growth(Level) {
  CriterionResult r;
  const auto rows = counterterm_scan(kScanCutoffs);
  std::vector<double> c1;
  std::vector<double> c2;
  std::vector<double> c3;
  std::vector<double> c4;
  for (const auto& c : rows) {
    c1.push_back(c.c1);
    c2.push_back(c.c2);
    c3.push_back(c.c3);
    c4.push_back(c.c4);
  }
  const auto g1 = linear_growth(kScanCutoffs, c1);
  const auto g3 = linear_growth(kScanCutoffs, c3);
  const auto g2 = log_growth(kScanCutoffs, c2);
  const auto g4 = log_growth(kScanCutoffs, c4);
  r.passed = g1.passes && g2.passes && g3.passes && g4.passes;
  r.detail = strf("N=4..24: C1 lin R2=%.5f dslope=%.1f%% %s; C3 lin R2=%.5f dslope=%.1f%% %s; C2 log R2=%.5f %s; "
                  "C4 log R2=%.5f %s",
                  g1.fit.r2, 100 * g1.slope_deviation, g1.passes ? "ok" : "FAIL", g3.fit.r2, 100 * g3.slope_deviation,
                  g3.passes ? "ok" : "FAIL", g2.fit.r2, g2.passes ? "ok" : "FAIL", g4.fit.r2, g4.passes ? "ok" : "FAIL");
  return r;
}

CriterionResult bphz_boundedness(Level) {
  CriterionResult r;
  const auto s2 = bphz_boundedness_scan(2, kScanCutoffs);
  const auto s3 = bphz_boundedness_scan(3, kScanCutoffs);
  const auto s4 = bphz_boundedness_scan(4, kScanCutoffs);
  bool ok2 = true;
  std::string d2;
  for (const auto& row : s2.rows) {
    const auto g = linear_growth(kScanCutoffs, row.raw);
    ok2 = ok2 && g.passes;
    d2 += strf(" R2=%.5f dslope=%.1f%%", g.fit.r2, 100 * g.slope_deviation);
  }
  bool ok3 = true;
  std::string d3;
  for (const auto& row : s3.rows) {
    const auto g = log_growth(kScanCutoffs, row.raw);
    ok3 = ok3 && g.passes;
    d3 += strf(" R2=%.5f", g.fit.r2);
  }
  bool ok4 = !s4.rows.empty();
  double worst = 0.0;
  for (const auto& row : s4.rows) {
    ok4 = ok4 && row.top_N > 0 && row.top_relative_change < 0.05;
    worst = std::max(worst, row.top_relative_change);
  }
  r.passed = ok2 && ok3 && ok4;
  r.detail = strf("p=4 %zu classes, max change between top two affordable N %.2f%% %s; p=2 raw vs N%s %s; "
                  "p=3 raw vs log N%s %s",
                  s4.rows.size(), 100 * worst, ok4 ? "ok" : "FAIL", d2.c_str(), ok2 ? "ok" : "FAIL", d3.c_str(),
                  ok3 ? "ok" : "FAIL");
  return r;
}

CriterionResult bubble_identity(Level) {
  CriterionResult r;
  double worst = 0.0;
  for (int N : {1, 2, 4}) {
    Valuator val(N);
    const double bubble = val.graph(fgiii());
    for (double eps : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0}) {
      const Bindings b = Bindings::from_eps(eps, val.counterterms());
      const double target = b.beta / (48.0 * b.alpha * b.alpha);
      worst = std::max(worst, std::abs(bubble - target) / bubble);
    }
  }
  r.passed = worst <= 1e-13;
  r.detail = strf("max relative |Pi_N(bubble) - beta/(48 alpha^2)| over N in {1,2,4}, 6 eps: %.2e", worst);
  return r;
}

CriterionResult mc_oracle(Level) {
  CriterionResult r;
  GffSampleConfig cfg;
  cfg.N = 2;
  cfg.samples = 100000;
  cfg.seed = 42;
  const auto est = gff_moments(cfg, {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}});
  Valuator val(2);
  const double targets[] = {0.0, 0.0, 24.0 * val.graph(fgiv()), 2.0 * val.graph(fgii()), 192.0 * val.graph(fgiii_plus())};
  const double limits[] = {4.0, 4.0, 5.0, 5.0, 5.0};
  const char* names[] = {"X", "Y", "X^2", "Y^2", "X^2Y"};
  r.passed = true;
  std::string d;
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double z = (est[i].mean - targets[i]) / est[i].std_error;
    const bool ok = std::abs(z) <= limits[i];
    r.passed = r.passed && ok;
    d += strf(" E[%s] z=%+.2f%s", names[i], z, ok ? "" : "(FAIL)");
  }
  r.detail = "N=2, 1e5 samples, seed 42:" + d;
  return r;
}

CriterionResult borel_suite(Level) {
  CriterionResult r;
  double worst_resum = 0.0;
  for (double eps : {0.05, 0.1, 0.2}) {
    const double z = z_quadrature(eps);
    worst_resum = std::max(worst_resum, std::abs(pade_borel(eps, 20) - z) / z);
  }
  const double z0 = std::abs(z_quadrature(0.0) - std::sqrt(2.0 * std::acos(-1.0)));

  const auto g = asymptotic_coeffs_gamma(41);
  const auto m = asymptotic_coeffs_moments(41);
  double worst_route = 0.0;
  for (std::size_t n = 0; n < g.a.size(); ++n) {
    worst_route = std::max(worst_route, static_cast<double>(abs(g.a[n] - m.a[n]) / abs(m.a[n])));
  }

  const auto detail = pade_borel_detail(0.1, 20);
  std::complex<double> nearest{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& p : detail.poles) {
    if (std::abs(p) < std::abs(nearest)) nearest = p;
  }
  const double pole_dev = std::abs(nearest - std::complex<double>(-0.25, 0.0)) / 0.25;

  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
  const auto sokal = sokal_scan(15, grid);
  int noise = 0;
  for (const auto& c : sokal.cells) noise += c.below_noise ? 1 : 0;

  r.passed = worst_resum <= 1e-4 && z0 <= 1e-10 && worst_route <= 1e-12 && pole_dev <= 0.1 && sokal.pass;
  r.detail = strf("Pade-Borel rel err %.2e; |Z(0)-sqrt(2pi)| %.1e; a_n routes %.1e (n<=40); nearest pole "
                  "%.4f%+.4fi; Sokal %zu cells (%d below noise) %s, r=%.3f",
                  worst_resum, z0, worst_route, nearest.real(), nearest.imag(), sokal.cells.size(), noise,
                  sokal.pass ? "ok" : "FAIL", sokal.r);
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "coefficient-reproduction", coefficients},
      {2, "connectedness", connectedness},
      {3, "hopf-layer", hopf},
      {4, "commutative-diagram", commutative_diagram},
      {5, "exponential-deformation", exp_deformation},
      {6, "valuation-cross-check", valuation_cross_check},
      {7, "counterterm-growth", counterterm_growth},
      {8, "bphz-boundedness", bphz_boundedness},
      {9, "bubble-identity", bubble_identity},
      {10, "mc-oracle", mc_oracle},
      {11, "borel-suite", borel_suite},
  };
  return all;
}

std::vector<CriterionResult> run_all(Level level, const std::vector<int>& only,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run(level);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  return strf("[%s] %2d %-26s %7.2fs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds) + r.detail;
}

}  // namespace phi4::acceptance
