#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "phi4/canonical.hpp"
#include "phi4/cutoff.hpp"
#include "phi4/error.hpp"
#include "phi4/valuation.hpp"
#include "phi4/valuator.hpp"
#include "phi4/wick.hpp"

using namespace phi4;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

bool in_cutoff(const std::array<int, 3>& k, int N) { return std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]) <= N; }

// Two vertices joined by two or three lines, summed over free momenta directly.
double direct_banana2(int N) {
  double s = 0.0;
  for (const auto& k : oracle::modes(N)) s += oracle::prop(k) * oracle::prop(k);
  return s;
}

double direct_bubble(int N) {
  const auto ms = oracle::modes(N);
  double s = 0.0;
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      const std::array<int, 3> c{-a[0] - b[0], -a[1] - b[1], -a[2] - b[2]};
      if (in_cutoff(c, N)) s += oracle::prop(a) * oracle::prop(b) * oracle::prop(c);
    }
  }
  return s;
}

}  // namespace

TEST(Cutoff, ModeCount) {
  for (int N = 0; N <= 6; ++N) {
    EXPECT_EQ(Cutoff(N).size(), oracle::modes(N).size());
    EXPECT_EQ(Cutoff::mode_count(N), oracle::modes(N).size());
  }
  EXPECT_EQ(Cutoff::mode_count(2), 25u);
}

TEST(Cutoff, GreenFunctionAtOriginIsC1) {
  const Cutoff c(3);
  double c1 = 0.0;
  for (const auto& k : c.modes()) c1 += propagator(k);
  EXPECT_NEAR(green_value(c, {0.0, 0.0, 0.0}), c1, 1e-12);
  EXPECT_NEAR(counterterms(3).c1, c1, 1e-12);
}

TEST(Valuation, TwentyFiveModeSumForTwoLineBanana) {
  const double direct = direct_banana2(2);
  for (auto m : {ValuationMethod::momentum, ValuationMethod::grid, ValuationMethod::kernel}) {
    EXPECT_LT(rel(pi(diagrams::banana(2), 2, m).value, direct), 1e-12) << to_string(m);
  }
}

TEST(Valuation, DirectBubbleSum) {
  for (int N = 1; N <= 3; ++N) {
    const double direct = direct_bubble(N);
    for (auto m : {ValuationMethod::momentum, ValuationMethod::grid, ValuationMethod::kernel}) {
      EXPECT_LT(rel(pi(diagrams::bubble(), N, m).value, direct), 1e-12) << to_string(m) << " N=" << N;
    }
  }
}

TEST(Valuation, KernelAgreesWithMomentumOnConnectedClasses) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& [key, term] : p(n, 1)) {
      for (int N = 1; N <= 2; ++N) {
        const double a = pi(term.graph, N, ValuationMethod::kernel).value;
        const double b = pi(term.graph, N, ValuationMethod::momentum).value;
        EXPECT_LT(rel(a, b), 1e-10) << key.hex() << " N=" << N;
      }
    }
  }
}

TEST(Valuation, MonotoneInCutoff) {
  for (const auto& g : {diagrams::bubble(), diagrams::banana(4), diagrams::double_triangle(), diagrams::bubble_with_tail()}) {
    double prev = 0.0;
    for (int N = 0; N <= 6; ++N) {
      const double v = pi(g, N, ValuationMethod::kernel).value;
      EXPECT_GT(v, prev) << "N=" << N;
      prev = v;
    }
  }
}

TEST(Valuation, MultiplicativeOverDisjointUnions) {
  std::mt19937_64 rng(5);
  Valuator val(2);
  int checked = 0;
  while (checked < 10) {
    const auto a = oracle::random_graph(rng, 2 + checked % 2, 2, 0.9);
    const auto b = oracle::random_graph(rng, 2 + (checked + 1) % 2, 3, 0.9);
    if (!is_connected(a) || !is_connected(b)) continue;
    const double ab = val.graph(disjoint_union(a, b));
    EXPECT_LT(rel(ab, pi(a, 2, ValuationMethod::momentum).value * pi(b, 2, ValuationMethod::momentum).value), 1e-12);
    ++checked;
  }
  EXPECT_DOUBLE_EQ(val.graph(diagrams::unit()), 1.0);
  EXPECT_DOUBLE_EQ(val.graph(diagrams::point()), 1.0);
}

TEST(Valuation, CountertermsAtZeroCutoff) {
  const auto ct = counterterms(0);
  EXPECT_DOUBLE_EQ(ct.c1, 1.0);
  EXPECT_DOUBLE_EQ(ct.c2, 6.0);
  EXPECT_DOUBLE_EQ(ct.c3, 0.75);
  EXPECT_DOUBLE_EQ(ct.c4, 4.5);
}

TEST(Valuation, WorkBudget) {
  ValuationOptions opts;
  opts.work_budget = 10;
  EXPECT_THROW(pi_momentum(diagrams::banana(4), 4, opts), BudgetExceeded);
}

TEST(Valuator, SymbolsNeedBindings) {
  Valuator val(1);
  EXPECT_THROW(val.valuate(cumulant(2)), UnboundSymbol);
  const auto b = Bindings::from_eps(0.2, val.counterterms());
  EXPECT_DOUBLE_EQ(b.alpha, 0.05);
  const double direct = 24 * b.alpha * b.alpha * val.graph(diagrams::banana(4)) + 2 * b.beta * b.beta * val.graph(diagrams::banana(2));
  EXPECT_LT(rel(val.valuate(cumulant(2), b), direct), 1e-13);
}

TEST(Valuator, BphzReductionUsesBubbleValue) {
  Valuator val(2);
  const auto g = diagrams::bubble_with_tail();
  const double expect = val.graph(g) - val.bubble() * val.graph(diagrams::banana(2));
  EXPECT_LT(rel(val.valuate(bphz_reduce(g)), expect), 1e-13);
}
