#include <gtest/gtest.h>

#include <sstream>

#include "chronos/error.hpp"
#include "chronos/io.hpp"
#include "chronos/oracle.hpp"
#include "chronos/reachability.hpp"
#include "support.hpp"

using namespace chronos;
using namespace chronos::testing;

TEST(Parse, BasicEdgeList) {
  auto g = parse_edge_list("0 1 1\n1 2 2");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.lifetime(), 2u);
}

TEST(Parse, RemapsUnusedLabels) {
  auto g = parse_edge_list("0 1 5\n1 2 9\n");
  EXPECT_EQ(g.lifetime(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1, 1));
  EXPECT_TRUE(g.has_edge(1, 2, 2));
  EXPECT_EQ(g.original_label(1), 5u);
  EXPECT_EQ(g.original_label(2), 9u);
  EXPECT_TRUE(g.is_normalized());
}

TEST(Parse, RejectsBadInput) {
  try {
    parse_edge_list("0 0 1");
    FAIL() << "loop accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::loop_edge);
  }
  try {
    parse_edge_list("0 1 0");
    FAIL() << "label 0 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_label);
  }
  EXPECT_THROW(parse_edge_list("0 1"), Error);
  EXPECT_THROW(parse_edge_list("0 1 2 3"), Error);
  EXPECT_THROW(parse_edge_list("a b 1"), Error);
  EXPECT_THROW(parse_edge_list("-1 2 1"), Error);
}

TEST(Parse, CommentsBlankLinesAndDuplicates) {
  auto g = parse_edge_list("# header\n\n0 1 3  # trailing\n1 0 3\n   \n2 1 4\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.vertex_count(), 3u);
}

TEST(Parse, JsonAndRoundTrips) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen::random_graph(2 + seed % 9, 1 + seed % 20, 1 + seed % 7, seed);
    auto text = serialize_edge_list(g);
    auto back = parse_edge_list(text);
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    ASSERT_EQ(back.edge_count(), g.edge_count());
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), back.edges().begin()));
    auto json_back = parse_any(serialize_json(g));
    EXPECT_EQ(json_back.vertex_count(), g.vertex_count());
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), json_back.edges().begin(),
                           json_back.edges().end()));
  }
  EXPECT_THROW(parse_json("{\"edges\": [[0, 1]]}"), Error);
  EXPECT_THROW(parse_json("[1, 2]"), Error);
}

TEST(Parse, KeepsIsolatedTrailingVertices) {
  TemporalGraph g(5, {{0, 1, 1}});
  auto back = parse_edge_list(serialize_edge_list(g));
  EXPECT_EQ(back.vertex_count(), 5u);
}

TEST(UnderlyingGraph, Examples) {
  auto a = underlying_graph(TemporalGraph(2, {{0, 1, 1}, {0, 1, 2}}));
  EXPECT_EQ(a.edge_count(), 1u);
  auto b = underlying_graph(I1());
  EXPECT_EQ(b.edge_count(), 2u);
  EXPECT_TRUE(b.adjacent(0, 1));
  EXPECT_TRUE(b.adjacent(1, 2));
  EXPECT_FALSE(b.adjacent(0, 2));
  EXPECT_EQ(underlying_graph(TemporalGraph()).edge_count(), 0u);
}

TEST(Indices, NeighborsAndLabels) {
  auto g = I5();
  auto nb = g.neighbors(0);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(nb[0].t, 1u);
  EXPECT_EQ(nb[1].t, 3u);
  EXPECT_EQ(g.neighbors_at(1, 2).size(), 1u);
  EXPECT_EQ(g.labels_between(0, 2).size(), 1u);
  EXPECT_EQ(g.labels_between(2, 0)[0], 3u);
  EXPECT_TRUE(g.labels_between(0, 0).empty());
  EXPECT_EQ(g.edges_at(2).size(), 1u);
  EXPECT_TRUE(g.edges_at(7).empty());
}

TEST(Reachability, EarliestArrival) {
  EXPECT_EQ(earliest_arrival(I1(), 0, 2), 2u);
  EXPECT_FALSE(earliest_arrival(I2(), 0, 2).has_value());
  EXPECT_EQ(earliest_arrival(I1(), 1, 1), 1u);
}

TEST(Reachability, FastestDuration) {
  EXPECT_EQ(fastest_duration(I1(), 0, 2), 1u);
  EXPECT_EQ(fastest_duration(I5(), 0, 2), 0u);
  EXPECT_FALSE(fastest_duration(I2(), 0, 2).has_value());
  EXPECT_EQ(fastest_duration(I2(), 0, 0), 0u);
}

TEST(Reachability, ConnectivityMatrix) {
  auto a = connectivity_matrix(I1());
  EXPECT_TRUE(a[0][2]);
  EXPECT_FALSE(a[2][0]);
  EXPECT_TRUE(connectivity_matrix(TemporalGraph(1, {}))[0][0]);
  EXPECT_FALSE(connectivity_matrix(I2())[0][2]);
}

// Earliest arrival and fastest duration straight from enumerated paths.
TEST(Reachability, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto item = random_item(seed, 9, 20, 6);
    const auto& g = item.g;
    const auto a = connectivity_matrix(g);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (s == z) continue;
        std::optional<Time> arrival, duration;
        oracle::for_each_path_from(g, s, [&](const TemporalPath& p) {
          if (p.target() != z || p.hops.empty()) return;
          if (!arrival || p.arrival_time() < *arrival) arrival = p.arrival_time();
          const Time d = p.arrival_time() - p.start_time();
          if (!duration || d < *duration) duration = d;
        });
        EXPECT_EQ(earliest_arrival(g, s, z), arrival) << "seed " << seed;
        EXPECT_EQ(fastest_duration(g, s, z), duration) << "seed " << seed;
        EXPECT_EQ(a[s][z], arrival.has_value());
      }
    }
  }
}

TEST(Restrict, Examples) {
  auto r = restrict(I5(), 1, 2);
  EXPECT_EQ(r.edge_count(), 2u);
  EXPECT_FALSE(r.has_edge(0, 2, 3));
  const Vertex banned[] = {1};
  EXPECT_TRUE(restrict(I1(), 1, 2, banned).empty());
  auto same = restrict(I1(), 1, 2);
  EXPECT_TRUE(std::equal(same.edges().begin(), same.edges().end(), I1().edges().begin()));
  EXPECT_EQ(same.lifetime(), 2u);
}

TEST(PathValidator, CatchesViolations) {
  auto g = I5();
  EXPECT_TRUE(is_valid_path(g, {0, {{1, 1}, {2, 2}}}));
  EXPECT_TRUE(is_valid_path(g, {0, {}}));
  std::string why;
  EXPECT_FALSE(is_valid_path(g, {0, {{2, 3}, {1, 2}}}, &why));
  EXPECT_FALSE(is_valid_path(g, {0, {{1, 2}}}, &why));
  EXPECT_FALSE(is_valid_path(TemporalGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}),
                             {0, {{1, 1}, {2, 1}, {0, 1}}}, &why));
}
