#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "phi4/canonical.hpp"
#include "phi4/error.hpp"
#include "phi4/multigraph.hpp"
#include "phi4/subgraphs.hpp"

using namespace phi4;

TEST(Multigraph, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(Multigraph(2, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidArgument);
}

TEST(Multigraph, NamedDiagrams) {
  EXPECT_EQ(diagrams::bubble().edge_count(), 3u);
  EXPECT_EQ(degree(diagrams::bubble()), 0);
  EXPECT_EQ(degree(diagrams::banana(4)), -1);
  EXPECT_EQ(degree(diagrams::double_triangle()), 0);
  EXPECT_EQ(diagrams::bubble_with_tail().leg_degrees(), (std::vector<int>{4, 4, 2}));
  EXPECT_EQ(loop_number(diagrams::double_triangle()), 4);
  EXPECT_TRUE(is_connected(diagrams::point()));
  EXPECT_FALSE(is_connected(disjoint_union(diagrams::bubble(), diagrams::bubble())));
}

TEST(Multigraph, MatrixRoundTrip) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_graph(rng, 5, 3);
    EXPECT_EQ(from_multiplicity_matrix(5, multiplicity_matrix(g)), g);
  }
}

TEST(Canonical, MatchesBruteForceClassification) {
  std::mt19937_64 rng(7);
  std::vector<Multigraph> graphs;
  for (int t = 0; t < 300; ++t) graphs.push_back(oracle::random_graph(rng, 2 + t % 5, 3, 0.6));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); j += 7) {
      const bool brute = oracle::brute_key(graphs[i]) == oracle::brute_key(graphs[j]);
      EXPECT_EQ(canonicalize(graphs[i]) == canonicalize(graphs[j]), brute);
    }
  }
}

TEST(Canonical, InvariantUnderThousandRelabelings) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 8;
    const auto g = oracle::random_graph(rng, n, 4);
    const auto perm = oracle::random_permutation(rng, n);
    const auto h = relabel(g, perm);
    ASSERT_EQ(canonicalize(g), canonicalize(h));
    ASSERT_EQ(canonical_form(g), canonical_form(h));
    ASSERT_EQ(relabel(g, canonical_labeling(g)), canonical_form(g));
    ASSERT_EQ(from_key(canonicalize(g)), canonical_form(g));
  }
}

TEST(Canonical, DistinguishesRegularNonIsomorphicPair) {
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  const Multigraph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const Multigraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(isomorphic(prism, k33));
}

TEST(Canonical, SizeCap) {
  EXPECT_THROW(canonicalize(Multigraph(kMaxCanonicalVertices + 1, {})), SizeExceeded);
}

TEST(Subgraphs, BubbleWithTailHasOneDivergentSubgraph) {
  const auto subs = divergent_subgraphs(diagrams::bubble_with_tail());
  ASSERT_EQ(subs.size(), 1u);
  const auto quotient = contract(diagrams::bubble_with_tail(), subs[0]);
  EXPECT_TRUE(isomorphic(quotient, diagrams::banana(2)));
}

TEST(Subgraphs, EverySelectionIsFullConnectedDivergent) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_graph(rng, 4, 4, 0.8);
    if (!is_connected(g)) continue;
    for (const auto& s : divergent_subgraphs(g)) {
      for (const auto& comp : s.components) {
        const auto sub = induced_subgraph(g, comp);
        EXPECT_TRUE(is_connected(sub));
        EXPECT_LE(degree(sub), 0);
      }
      EXPECT_NE(s.edge_indices.size(), g.edge_count());
    }
  }
}
