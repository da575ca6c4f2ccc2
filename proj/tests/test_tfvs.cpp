#include <gtest/gtest.h>

#include "chronos/error.hpp"
#include "chronos/forest_dp.hpp"
#include "chronos/io.hpp"
#include "chronos/oracle.hpp"
#include "chronos/tfvs.hpp"
#include "support.hpp"

using namespace chronos;
using namespace chronos::testing;

namespace {

TemporalGraph triangle() { return TemporalGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(TimedFvs, ForestNeedsNothing) {
  EXPECT_TRUE(compute_timed_fvs(gen::random_forest(12, 5, 3)).empty());
  EXPECT_TRUE(compute_timed_fvs(I1()).empty());
}

TEST(TimedFvs, TriangleNeedsOne) {
  const auto x = compute_timed_fvs(triangle());
  EXPECT_EQ(x.size(), 1u);
  EXPECT_TRUE(is_timed_fvs(triangle(), x));
  EXPECT_FALSE(is_timed_fvs(triangle(), {}));
}

TEST(TimedFvs, TwoTrianglesNeedTwo) {
  TemporalGraph g(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  const auto x = compute_timed_fvs(g);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_TRUE(is_timed_fvs(g, x));
}

TEST(TimedFvs, BranchingMatchesBruteForceMinimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto item = random_item(seed, 7, 12, 4);
    const auto x = compute_timed_fvs(item.g);
    ASSERT_TRUE(is_timed_fvs(item.g, x));
    const auto bf = minimum_timed_fvs_bf(item.g, x.size());
    ASSERT_TRUE(bf.has_value());
    EXPECT_EQ(bf->size(), x.size()) << "seed " << seed;
  }
}

TEST(TimedFvs, GreedyIsValid) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto item = random_item(seed);
    EXPECT_TRUE(is_timed_fvs(item.g, greedy_timed_fvs(item.g)));
  }
}

TEST(TimedFvs, BudgetIsEnforced) {
  TemporalGraph g(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  TfvsSearchOptions options;
  options.max_size = 1;
  EXPECT_THROW(compute_timed_fvs(g, options), Error);
}

TEST(TimedFvs, ParseMapsInputLabels) {
  const auto g = parse_any("0 1 10\n1 2 10\n0 2 10\n");
  const auto x = parse_timed_fvs("# one appearance\n1 10\n", g);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0].v, 1u);
  EXPECT_EQ(x[0].t, 1u);
  EXPECT_TRUE(is_timed_fvs(g, x));
}

TEST(Preprocess, KeepsCounts) {
  const auto pre = preprocess_terminals(I1(), 0, 2);
  EXPECT_EQ(oracle::count_paths_bf(pre.g, pre.s, pre.z), 1);
  EXPECT_EQ(pre.g.neighbors(pre.s).size(), 1u);
  EXPECT_EQ(pre.g.neighbors(pre.s)[0].t, 1u);
  EXPECT_EQ(pre.g.neighbors(pre.z).size(), 1u);
  EXPECT_EQ(pre.g.neighbors(pre.z)[0].t, pre.g.lifetime());

  TemporalGraph empty(2, {});
  const auto pe = preprocess_terminals(empty, 0, 1);
  EXPECT_EQ(oracle::count_paths_bf(pe.g, pe.s, pe.z), 0);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto item = random_item(seed);
    const auto p = preprocess_terminals(item.g, item.s, item.z);
    EXPECT_EQ(oracle::count_paths_bf(p.g, p.s, p.z), oracle::count_paths_bf(item.g, item.s, item.z));
  }
}

TEST(Preprocess, ConformingInstanceKeepsShape) {
  // s has one edge at 1, z one edge at T.
  TemporalGraph g(4, {{0, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 3, 3}});
  const auto pre = preprocess_terminals(g, 0, 3);
  EXPECT_EQ(pre.g.vertex_count(), 4u);
  EXPECT_EQ(pre.g.edges().size(), g.edges().size());
}

TEST(CountTfvs, Examples) {
  EXPECT_EQ(count_tfvs(I5(), 0, 2), 2);
  EXPECT_EQ(count_tfvs(I1(), 0, 2), 1);
  EXPECT_EQ(count_tfvs(I2(), 0, 2), 0);
  EXPECT_EQ(count_tfvs(I3(), 0, 3), 2);
  EXPECT_EQ(count_tfvs(I4(), 0, 1), 2);
  EXPECT_EQ(count_tfvs(TemporalGraph(3, {}), 0, 2), 0);
  EXPECT_EQ(count_tfvs(I1(), 1, 1), 1);
}

TEST(CountTfvs, ForestEqualsForestDp) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen::random_forest(10, 6, seed);
    EXPECT_EQ(count_tfvs(g, 0, 9), count_forest(g, 0, 9));
  }
}

TEST(CountTfvs, RejectsInvalidSet) {
  EXPECT_THROW(count_tfvs(triangle(), 0, 1, TimedFVS{}), Error);
}

TEST(CountTfvs, AnyValidSetGivesTheSameCount) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto item = random_item(seed, 8, 16, 5);
    const auto expected = oracle::count_paths_bf(item.g, item.s, item.z);
    EXPECT_EQ(count_tfvs(item.g, item.s, item.z, greedy_timed_fvs(item.g)), expected) << "seed " << seed;
  }
}

TEST(CountTfvs, MatchesOracle) {
  std::size_t by_size[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    auto item = random_item(seed, 9, 20, 8);
    TfvsStats stats;
    const auto c = count_tfvs(item.g, item.s, item.z, std::nullopt, &stats);
    ASSERT_EQ(c, oracle::count_paths_bf(item.g, item.s, item.z)) << "seed " << seed;
    if (stats.x_size < 4) ++by_size[stats.x_size];
    const std::uint64_t k = stats.x_size + 2;
    double cap = static_cast<double>(factorial(k));
    for (std::uint64_t i = 0; i < k; ++i) cap *= 4;
    EXPECT_LE(static_cast<double>(stats.patterns), cap);
  }
  EXPECT_GT(by_size[1], 0u);
  EXPECT_GT(by_size[2], 0u);
  EXPECT_GT(by_size[3], 0u);
}
