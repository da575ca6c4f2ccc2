#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/star.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos::oracle {

// Brute force by depth-first extension: from the current vertex follow every
// time-edge with label >= the current label to an unvisited vertex. Slow on
// purpose; this is the reference every other counter is tested against.

inline constexpr std::uint64_t kDefaultLimit = 1'000'000;

using PathSet = std::vector<TemporalPath>;

// All temporal (s,z)-paths in DFS order; the trivial path when s = z.
// Throws Error(explosion) once more than `limit` paths are found.
PathSet enumerate_paths(const TemporalGraph& g, Vertex s, Vertex z,
                        std::optional<std::uint64_t> limit = kDefaultLimit);

// Calls visit(path) for every temporal path that starts at s, including the
// trivial one. The path object is reused between calls.
void for_each_path_from(const TemporalGraph& g, Vertex s,
                        const std::function<void(const TemporalPath&)>& visit);

BigCount count_paths_bf(const TemporalGraph& g, Vertex s, Vertex z);

// Same count, but throws Error(explosion) once the search has visited more
// than `limit` partial paths from s.
BigCount count_paths_limited(const TemporalGraph& g, Vertex s, Vertex z, std::uint64_t limit = kDefaultLimit);

// Number of foremost / fastest (s,z)-paths; 0 when there is none.
BigCount count_optimal_bf(const TemporalGraph& g, Vertex s, Vertex z, Star star);

// (sigma*_sz, sigma*_sz(v)); for v in {s, z} the second value equals the first.
std::pair<BigCount, BigCount> sigma_bf(const TemporalGraph& g, Vertex s, Vertex z, Vertex v, Star star);

ExactRatio betweenness_bf(const TemporalGraph& g, Vertex v, Star star);

// Betweenness of every vertex, sharing the enumeration across vertices.
std::vector<ExactRatio> betweenness_all_bf(const TemporalGraph& g, Star star);

// True iff some optimal path of some ordered pair has an internal vertex.
bool has_internal_optimal_path_bf(const TemporalGraph& g, Star star);

}  // namespace chronos::oracle
