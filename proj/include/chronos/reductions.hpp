#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/star.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// Any exact (s,z)-path counter: forest DP, vimw, tfvs, fen or the oracle.
using Counter = std::function<BigCount(const TemporalGraph&, Vertex, Vertex)>;

// Time windows [lo, hi] whose restrictions together hold each *-optimal
// (s,z)-path exactly once: [1, t*] for foremost, [t0, t0 + t_f] for fastest.
// Empty when there is no (s,z)-path. Requires s != z.
std::vector<std::pair<Time, Time>> optimal_windows(const TemporalGraph& g, Vertex s, Vertex z, Star star);

BigCount count_foremost(const TemporalGraph& g, Vertex s, Vertex z, const Counter& counter);
BigCount count_fastest(const TemporalGraph& g, Vertex s, Vertex z, const Counter& counter);
BigCount count_optimal(const TemporalGraph& g, Vertex s, Vertex z, Star star, const Counter& counter);

// (sigma*_sz, sigma*_sz(v)) for v not in {s, z}: the optimum is fixed in g
// and the deletion of v happens inside each restricted instance.
std::pair<BigCount, BigCount> sigma_through(const TemporalGraph& g, Vertex s, Vertex z, Vertex v, Star star,
                                            const Counter& counter);

ExactRatio betweenness_exact(const TemporalGraph& g, Vertex v, Star star, const Counter& counter);

}  // namespace chronos
