#include <gtest/gtest.h>

#include <cmath>

#include "chronos/fen.hpp"
#include "chronos/forest_dp.hpp"
#include "chronos/oracle.hpp"
#include "support.hpp"

using namespace chronos;
using namespace chronos::testing;

TEST(Prune, RemovesHangingTrees) {
  // Star centred at s = 0 with z = 1 and extra leaves.
  TemporalGraph star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}});
  const auto pruned = prune_degree_one(star, 0, 1);
  EXPECT_EQ(pruned.edges().size(), 1u);
  EXPECT_EQ(oracle::count_paths_bf(pruned, 0, 1), oracle::count_paths_bf(star, 0, 1));

  EXPECT_EQ(prune_degree_one(I1(), 0, 2).edges().size(), 2u);
}

TEST(Prune, KeepsCounts) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto item = random_item(seed);
    EXPECT_EQ(oracle::count_paths_bf(prune_degree_one(item.g, item.s, item.z), item.s, item.z),
              oracle::count_paths_bf(item.g, item.s, item.z));
  }
}

TEST(FeedbackEdges, Examples) {
  EXPECT_TRUE(feedback_edge_set(underlying_graph(gen::random_forest(10, 3, 1))).empty());
  const auto cycle = TemporalGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  EXPECT_EQ(feedback_edge_set(underlying_graph(cycle)).size(), 1u);
  EXPECT_EQ(feedback_edge_number(gen::theta_graph(3, 3)), 2u);
}

TEST(FeedbackEdges, EqualsCyclomaticNumber) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto item = random_item(seed);
    const auto u = underlying_graph(item.g);
    EXPECT_EQ(feedback_edge_number(item.g), u.edge_count() + u.component_count() - u.vertex_count());
    // Removing the set leaves a forest.
    auto edges = u.edges();
    for (auto e : feedback_edge_set(u)) std::erase(edges, e);
    EXPECT_TRUE(StaticGraph(u.vertex_count(), edges).is_forest());
  }
}

TEST(CountFen, Examples) {
  EXPECT_EQ(count_fen(I5(), 0, 2), 2);
  EXPECT_EQ(count_fen(gen::theta_graph(3, 3), 0, 1), 3);
  EXPECT_EQ(count_fen(I1(), 0, 2), 1);
  EXPECT_EQ(count_fen(I2(), 0, 2), 0);
  EXPECT_EQ(count_fen(I4(), 0, 1), 2);
  EXPECT_EQ(count_fen(I1(), 2, 2), 1);
}

TEST(CountFen, ForestEqualsForestDp) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen::random_forest(10, 6, seed);
    FenStats stats;
    EXPECT_EQ(count_fen(g, 0, 9, &stats), count_forest(g, 0, 9));
    EXPECT_EQ(stats.f, 0u);
  }
}

TEST(CountFen, DiamondChains) {
  for (std::size_t l = 1; l <= 20; ++l) {
    EXPECT_EQ(count_fen(gen::diamond_chain(l), 0, 3 * l), BigCount(1) << l);
  }
}

TEST(CountFen, MatchesOracleWithinCandidateCap) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto item = random_item(seed);
    FenStats stats;
    ASSERT_EQ(count_fen(item.g, item.s, item.z, &stats), oracle::count_paths_bf(item.g, item.s, item.z))
        << "seed " << seed;
    double cap = 256.0 * std::pow(8.0, static_cast<double>(stats.f)) * std::tgamma(static_cast<double>(stats.f) + 3);
    EXPECT_LE(static_cast<double>(stats.candidates), cap);
  }
}

TEST(Condense, LinksCoverThePrunedGraph) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto item = random_item(seed);
    const auto cg = condense(item.g, item.s, item.z);
    const auto pruned = underlying_graph(prune_degree_one(item.g, item.s, item.z));
    std::size_t edges = 0;
    for (const auto& link : cg.links) edges += link.vertices.size() - 1;
    EXPECT_EQ(edges, pruned.edge_count());
    EXPECT_EQ(cg.f, pruned.edge_count() + pruned.component_count() - pruned.vertex_count());
  }
}
