#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phi4/canonical.hpp"
#include "phi4/error.hpp"
#include "phi4/wick.hpp"

using namespace phi4;

namespace {

void expect_matches_brute(int a, int b) {
  const auto brute = oracle::brute_wick(a, b);
  const auto sum = p0(a, b);
  EXPECT_EQ(sum.size(), brute.size()) << "X^" << a << " Y^" << b;
  for (const auto& [key, term] : sum) {
    const auto it = brute.find(oracle::brute_key(term.graph));
    ASSERT_NE(it, brute.end());
    EXPECT_EQ(term.coeff, Rational(it->second)) << "X^" << a << " Y^" << b;
  }
}

}  // namespace

TEST(Wick, MatchesBruteForceEnumerator) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      if (a + b == 0 || 4 * a + 2 * b > 14) continue;
      expect_matches_brute(a, b);
    }
  }
}

TEST(Wick, KnownSmallClasses) {
  EXPECT_EQ(p0(2, 0).coefficient(diagrams::banana(4)), Rational(24));
  EXPECT_EQ(p0(2, 0).size(), 1u);
  EXPECT_EQ(p0(0, 2).coefficient(diagrams::banana(2)), Rational(2));
  EXPECT_EQ(p0(2, 1).coefficient(diagrams::bubble_with_tail()), Rational(192));
  EXPECT_TRUE(p0(1, 0).empty());
  EXPECT_EQ(p0(0, 0).coefficient(diagrams::unit()), Rational(1));
}

TEST(Wick, CountsAgainstDoubleFactorial) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto c = matching_count_check(a, b);
      EXPECT_EQ(c.total, double_factorial_odd(static_cast<unsigned>(2 * a + b)));
      EXPECT_LE(c.non_flat, c.total);
    }
  }
}

TEST(Wick, EnumeratorVisitsNonFlatMatchingsOnly) {
  std::uint64_t seen = 0;
  const auto n = enumerate_matchings(2, 1, [&](const Matching& m) {
    ++seen;
    EXPECT_EQ(m.size(), 5u);
    const auto g = matching_graph(2, 1, m);
    EXPECT_EQ(g.leg_degrees(), (std::vector<int>{4, 4, 2}));
  });
  EXPECT_EQ(seen, n);
  EXPECT_EQ(Rational(static_cast<long>(n)), p0(2, 1).total());
}

TEST(Wick, ConnectedPartIsSubset) {
  const auto all = p0(3, 1);
  for (const auto& [key, term] : p(3, 1)) {
    EXPECT_TRUE(is_connected(term.graph));
    EXPECT_EQ(all.coefficient(key), term.coeff);
  }
}

TEST(Wick, LegCap) {
  WickConfig cfg;
  cfg.max_legs = 8;
  EXPECT_THROW(p0(3, 0, cfg), CapExceeded);
}
