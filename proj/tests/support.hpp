#pragma once

#include <cstdint>
#include <vector>

#include "chronos/chordal.hpp"
#include "chronos/generate.hpp"
#include "chronos/random.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos::testing {

// Small named instances; s = 0, v = 1, z = 2 unless noted.
inline TemporalGraph I1() { return TemporalGraph(3, {{0, 1, 1}, {1, 2, 2}}); }
inline TemporalGraph I2() { return TemporalGraph(3, {{0, 1, 2}, {1, 2, 1}}); }
// One diamond: s = 0, w = 1, w' = 2, z = 3.
inline TemporalGraph I3() { return gen::diamond_chain(1); }
// s = 0, z = 1.
inline TemporalGraph I4() { return TemporalGraph(2, {{0, 1, 1}, {0, 1, 2}}); }
inline TemporalGraph I5() { return TemporalGraph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}); }

// The random part of the differential corpus: n <= 10, |E| <= 25, T <= 8.
struct CorpusItem {
  TemporalGraph g;
  Vertex s = 0;
  Vertex z = 0;
};

inline CorpusItem random_item(std::uint64_t seed, std::size_t max_n = 10, std::size_t max_m = 25,
                              Time max_T = 8) {
  SplitMix64 rng(seed);
  const std::size_t n = 2 + rng.below(max_n - 1);
  const std::size_t m = 1 + rng.below(max_m);
  const Time T = static_cast<Time>(1 + rng.below(max_T));
  CorpusItem item{gen::random_graph(n, m, T, rng()), 0, 0};
  item.s = static_cast<Vertex>(rng.below(n));
  item.z = static_cast<Vertex>(rng.below(n - 1));
  if (item.z >= item.s) ++item.z;
  return item;
}

// Random chordal graph: every new vertex is made adjacent to a random subset
// of an earlier clique, so it is simplicial when added.
inline StaticGraph random_chordal(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> attach;
    if (!bags.empty() && rng.below(5) != 0) {
      const auto& bag = bags[rng.below(bags.size())];
      for (Vertex w : bag) {
        if (rng.below(3) != 0) attach.push_back(w);
      }
    }
    for (Vertex w : attach) edges.emplace_back(w, v);
    attach.push_back(v);
    bags.push_back(attach);
  }
  return StaticGraph(n, std::move(edges));
}

// Sum over all vertex subsets, straight from the definition.
inline BigCount mc_is_brute_force(const ChordalInstance& inst, std::uint32_t k) {
  const std::size_t n = inst.graph.vertex_count();
  BigCount total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint32_t colours = 0;
    bool ok = true;
    BigCount product = 1;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      const std::uint32_t c = 1u << inst.colour[v];
      if (colours & c) ok = false;
      colours |= c;
      product *= inst.weight[v];
      for (Vertex w : inst.graph.neighbors(v)) {
        if (mask >> w & 1) ok = false;
      }
    }
    if (ok && colours == (1u << k) - 1) total += product;
  }
  return total;
}

}  // namespace chronos::testing
