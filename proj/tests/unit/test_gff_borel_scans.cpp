#include <gtest/gtest.h>

#include <cmath>

#include "phi4/borel.hpp"
#include "phi4/error.hpp"
#include "phi4/gff.hpp"
#include "phi4/scans.hpp"

using namespace phi4;

TEST(Gff, DeterministicAcrossThreadCounts) {
  GffSampleConfig cfg;
  cfg.N = 1;
  cfg.samples = 500;
  cfg.threads = 1;
  const auto one = gff_samples(cfg);
  cfg.threads = 3;
  const auto three = gff_samples(cfg);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].x, three[i].x);
    EXPECT_EQ(one[i].y, three[i].y);
  }
  cfg.seed = 43;
  EXPECT_NE(gff_samples(cfg)[0].x, one[0].x);
}

TEST(Gff, RejectsCoarseGrid) {
  GffSampleConfig cfg;
  cfg.N = 2;
  cfg.grid_size = 8;
  EXPECT_THROW(gff_samples(cfg), InvalidArgument);
}

TEST(Gff, WickObservablesAreCentred) {
  GffSampleConfig cfg;
  cfg.N = 1;
  cfg.samples = 20000;
  for (const auto& m : gff_moments(cfg, {{1, 0}, {0, 1}})) {
    EXPECT_LT(std::abs(m.mean), 5 * m.std_error) << m.a << "," << m.b;
  }
}

TEST(Borel, DualQuadrature) {
  for (double eps : {0.0, 0.01, 0.1, 0.3, 0.5}) {
    EXPECT_NEAR(z_quadrature(eps), z_quadrature_phi(eps), 1e-10 * z_quadrature(eps)) << eps;
  }
  EXPECT_NEAR(z_quadrature(0.0), std::sqrt(2.0 * M_PI), 1e-12);
}

TEST(Borel, CoefficientRoutesAndRatio) {
  const auto g = asymptotic_coeffs_gamma(30);
  const auto m = asymptotic_coeffs_moments(30);
  const auto b = borel_coeffs(30);
  for (int n = 0; n < 30; ++n) {
    const auto i = static_cast<std::size_t>(n);
    EXPECT_LT(static_cast<double>(abs((g.a[i] - m.a[i]) / m.a[i])), 1e-30) << n;
    if (n + 1 < 30) EXPECT_NEAR(static_cast<double>(b.b[i + 1] / b.b[i]), borel_ratio(n), 1e-13) << n;
  }
  EXPECT_NEAR(static_cast<double>(m.a[1]), -0.75 * std::sqrt(2.0 * M_PI), 1e-14);
}

TEST(Borel, PadeRecoversRationalFunction) {
  // 1 / (1 + 2t) = sum (-2t)^k
  std::vector<HighFloat> c;
  HighFloat term = 1;
  for (int k = 0; k < 6; ++k) {
    c.push_back(term);
    term *= -2;
  }
  const auto r = pade(c, 0, 1);
  EXPECT_NEAR(r(0.3), 1.0 / 1.6, 1e-15);
  ASSERT_EQ(r.poles().size(), 1u);
  EXPECT_NEAR(r.poles()[0].real(), -0.5, 1e-14);
  EXPECT_FALSE(has_positive_pole(r));
}

TEST(Borel, PadeBorelConvergesWithOrder) {
  const double eps = 0.2;
  const double z = z_quadrature(eps);
  double prev = 1.0;
  for (int order : {8, 12, 16, 20, 24}) {
    const double err = std::abs(pade_borel(eps, order) - z) / z;
    EXPECT_LT(err, prev) << order;
    prev = err;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(Borel, SokalScanPasses) {
  const auto rep = sokal_scan(12, {0.05, 0.1, 0.3});
  EXPECT_TRUE(rep.pass);
  for (const auto& c : rep.cells) EXPECT_LE(std::abs(c.remainder), c.bound) << c.n << " " << c.eps;
}

TEST(Scans, FitRecoversLine) {
  const auto f = fit_linear({1, 2, 3, 4}, {5, 7, 9, 11});
  EXPECT_DOUBLE_EQ(f.slope, 2.0);
  EXPECT_DOUBLE_EQ(f.intercept, 3.0);
  EXPECT_DOUBLE_EQ(f.r2, 1.0);
  EXPECT_THROW(fit_linear({1}, {1}), InvalidArgument);
}

TEST(Scans, GrowthClassifiers) {
  const std::vector<int> Ns{4, 8, 12, 16, 20, 24};
  std::vector<double> lin, lg, sq;
  for (int N : Ns) {
    lin.push_back(0.5 * N + 3);
    lg.push_back(2 * std::log(N) + 1);
    sq.push_back(1.0 * N * N);
  }
  EXPECT_TRUE(linear_growth(Ns, lin).passes);
  EXPECT_FALSE(linear_growth(Ns, sq).passes);
  EXPECT_TRUE(log_growth(Ns, lg).passes);
  EXPECT_FALSE(log_growth(Ns, sq).passes);
}

TEST(Scans, CountertermScanMatchesPointwise) {
  const auto rows = counterterm_scan({1, 3});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[1].c2, counterterms(3).c2);
}

TEST(Scans, CompensatedSecondOrderVanishes) {
  const auto s = bphz_boundedness_scan(2, {1, 2, 3});
  ASSERT_EQ(s.compensated.size(), 3u);
  for (double c : s.compensated) EXPECT_NEAR(c, 0.0, 1e-12);
}
