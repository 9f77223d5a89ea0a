#include <gtest/gtest.h>

#include "phi4/commutativity.hpp"
#include "phi4/cumulants.hpp"
#include "phi4/hopf_graph.hpp"
#include "phi4/hopf_poly.hpp"
#include "phi4/subgraphs.hpp"
#include "phi4/wick.hpp"

using namespace phi4;

namespace {

// kappa_n = n! [t^n] log(sum_k mu_k t^k / k!), expanding log(1 + u) directly.
std::vector<GradedSum> cumulants_by_log(int order) {
  std::vector<GradedSum> u(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    u[static_cast<std::size_t>(k)] = scaled(moment(k), Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
  }
  std::vector<GradedSum> log(static_cast<std::size_t>(order) + 1);
  std::vector<GradedSum> power = u;  // u^j, truncated
  for (int j = 1; j <= order; ++j) {
    const Rational c = Rational(j % 2 == 1 ? 1 : -1, j);
    for (int k = 1; k <= order; ++k) log[static_cast<std::size_t>(k)].add(power[static_cast<std::size_t>(k)], c);
    std::vector<GradedSum> next(static_cast<std::size_t>(order) + 1);
    for (int a = 1; a <= order; ++a) {
      for (int b = 1; a + b <= order; ++b) {
        next[static_cast<std::size_t>(a + b)].add(
            product(power[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]));
      }
    }
    power = std::move(next);
  }
  for (int k = 1; k <= order; ++k) {
    log[static_cast<std::size_t>(k)] =
        scaled(log[static_cast<std::size_t>(k)], Rational(factorial(static_cast<unsigned>(k))));
  }
  return log;
}

DiagramSum antipode_identity(const Multigraph& g) {
  DiagramSum out;
  for (const auto& [key, t] : coproduct(g)) {
    out.add(product(antipode(t.left), DiagramSum::single(t.right)), t.coeff);
  }
  return out;
}

}  // namespace

TEST(Cumulants, SecondMomentClosedForm) {
  GradedSum expect;
  expect.add({2, 0}, DiagramSum::single(diagrams::banana(4), 24));
  expect.add({0, 2}, DiagramSum::single(diagrams::banana(2), 2));
  EXPECT_EQ(moment(2), expect);
  EXPECT_EQ(cumulant(2), expect);
  EXPECT_EQ(moment(1), GradedSum{});
}

TEST(Cumulants, RecursionAgreesWithLogarithm) {
  const auto by_log = cumulants_by_log(5);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(cumulant(n), by_log[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(cumulant(n), cumulant_direct(n)) << n;
    EXPECT_TRUE(cumulant(n).all_connected()) << n;
  }
}

TEST(Cumulants, LogPartitionLowOrders) {
  const auto s = log_partition_series(3, true);
  EXPECT_TRUE(s[0].is_zero());
  EXPECT_TRUE(s[1].is_zero());
  EXPECT_FALSE(s[2].is_zero());
}

TEST(Hopf, CoproductOfBubbleWithTail) {
  const auto g = diagrams::bubble_with_tail();
  GraphTensorSum expect;
  expect.add(g, diagrams::unit(), 1);
  expect.add(diagrams::unit(), g, 1);
  expect.add(diagrams::bubble(), diagrams::banana(2), 1);
  EXPECT_EQ(coproduct(g), expect);
}

TEST(Hopf, AntipodeIdentityAndForestFormula) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [key, term] : p(n, 0)) {
      EXPECT_TRUE(antipode_identity(term.graph).empty()) << key.hex();
      EXPECT_EQ(antipode(term.graph), forest_antipode(term.graph)) << key.hex();
      EXPECT_TRUE(coassociative(term.graph)) << key.hex();
    }
  }
}

TEST(Hopf, BphzCharacterSubtractsBubble) {
  const auto g = diagrams::bubble_with_tail();
  DiagramSum expect = DiagramSum::single(g);
  expect.add(disjoint_union(diagrams::bubble(), diagrams::banana(2)), -1);
  EXPECT_EQ(bphz_character(g), expect);
  EXPECT_EQ(bphz_reduce(g).with_bubble_graphs(), expect);
}

TEST(Hopf, TwistedAntipodeVanishesOnConvergentGraphs) {
  EXPECT_TRUE(twisted_antipode(diagrams::bubble_with_tail()).empty());
  EXPECT_EQ(twisted_antipode(diagrams::bubble()), DiagramSum::single(diagrams::bubble(), -1));
}

TEST(HopfPoly, ExponentialDeformation) {
  for (int order = 2; order <= 10; order += 2) EXPECT_EQ(exp_deform(order), exp_target(order)) << order;
}

TEST(HopfPoly, AntipodeHatValues) {
  EXPECT_EQ(antipode_hat({2, 0}), HPolynomial::monomial({0, 1}, ScalarPoly::eta_power(1, -2)));
  EXPECT_TRUE(antipode_hat({1, 0}).is_zero());
  EXPECT_TRUE(antipode_hat({0, 1}).is_zero());
  EXPECT_EQ(deform(HPolynomial::monomial({0, 0})), HPolynomial::monomial({0, 0}));
}

TEST(HopfPoly, CoproductHatIsBinomial) {
  const auto t = coproduct_hat({3, 0});
  EXPECT_EQ(t.coefficient({1, 0}, {2, 0}), ScalarPoly(3));
  EXPECT_EQ(t.coefficient({0, 0}, {3, 0}), ScalarPoly(1));
  EXPECT_EQ(t.size(), 4u);
}

TEST(Commutativity, BubbleContractionMatchesMixedDiagrams) {
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(verify_commutativity(n).all_equal) << n;
  EXPECT_TRUE(verify_mixed({2, 1}).equal);
  EXPECT_EQ(insertion_count(4, 1), Integer(48 * 24 / 2));
}
