#include <gtest/gtest.h>

#include "romdom/baselines.hpp"
#include "romdom/bench.hpp"
#include "romdom/generators.hpp"

using namespace romdom;

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_rdf(fixtures::p3()), (Profile{0, 2, 0}));
  EXPECT_EQ(greedy_rdf(fixtures::h2()), (Profile{2, 0, 0, 0, 0}));
  EXPECT_EQ(greedy_rdf(fixtures::p7()), (Profile{0, 2, 0, 0, 2, 0, 1}));
  EXPECT_EQ(greedy_rdf(fixtures::k2()), (Profile{2, 0}));
  EXPECT_THROW(greedy_rdf(Graph(3, {{0, 1}})), IsolatedVertexError);
}

TEST(Greedy, AlwaysRdfAndAtLeastOptimum) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 2 + rng.below(11);
    const auto g = trial % 2 ? gen_random_tree(n, rng()) : gen_er(n, 0.35, rng());
    const auto c = greedy_rdf(g);
    ASSERT_TRUE(is_rdf(g, c));
    ASSERT_GE(weight(c), brute_force_optimum(g).optimum_weight);
  }
}

TEST(TreeDp, Examples) {
  EXPECT_EQ(tree_dp_optimum(fixtures::p3()).optimum_weight, 2u);
  EXPECT_EQ(tree_dp_optimum(fixtures::p7()).optimum_weight, 5u);
  EXPECT_EQ(tree_dp_optimum(fixtures::star3()).optimum_weight, 2u);
  EXPECT_EQ(tree_dp_optimum(fixtures::star3()).witness, (Profile{2, 0, 0, 0}));
  EXPECT_EQ(tree_dp_optimum(fixtures::k2()).optimum_weight, 2u);
}

TEST(TreeDp, RejectsNonTrees) {
  EXPECT_THROW(tree_dp(fixtures::c4()), NotATreeError);
  EXPECT_THROW(tree_dp(Graph(4, {{0, 1}, {2, 3}})), NotATreeError);
  EXPECT_THROW(tree_dp(Graph(1, {})), NotATreeError);
}

TEST(TreeDp, TableInvariants) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen_random_tree(2 + rng.below(30), rng());
    const auto res = tree_dp(g);
    for (vertex_t v = 0; v < g.size(); ++v) {
      const auto& s = res.table[v];
      EXPECT_GE(s.black, 2u);
      // Leaves other than the root: A=2, B=1, Cc=inf, D=0.
      if (v != 0 && g.degree(v) == 1) {
        EXPECT_EQ(s.black, 2u);
        EXPECT_EQ(s.gray, 1u);
        EXPECT_EQ(s.covered, DpStates::kInf);
        EXPECT_EQ(s.awaiting, 0u);
      }
    }
  }
}

TEST(TreeDp, MatchesBruteForceOn200Trees) {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 2 + rng.below(11);
    const auto g = trial % 2 ? gen_random_tree(n, rng()) : gen_ba_tree(n, rng());
    const auto dp = tree_dp_optimum(g);
    ASSERT_EQ(dp.optimum_weight, brute_force_optimum(g).optimum_weight) << to_edge_list(g);
    ASSERT_TRUE(is_rdf(g, dp.witness));
    ASSERT_EQ(weight(dp.witness), dp.optimum_weight);
  }
}

TEST(TreeDp, WitnessOnLargeTrees) {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen_random_tree(100 + rng.below(300), rng());
    const auto dp = tree_dp_optimum(g);
    ASSERT_TRUE(is_rdf(g, dp.witness));
    ASSERT_EQ(weight(dp.witness), dp.optimum_weight);
    ASSERT_LE(dp.optimum_weight, weight(greedy_rdf(g)));
  }
}

TEST(TreeDp, HarnessGuardPasses) { EXPECT_NO_THROW(detail::ensure_tree_dp_validated()); }
