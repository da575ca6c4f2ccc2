#pragma once

#include <optional>
#include <vector>

#include "chronos/temporal_graph.hpp"

namespace chronos {

inline constexpr Time kNever = 0xffffffffu;

// Earliest time each vertex can be reached by a temporal path from s that
// uses only labels >= t_start. The source itself gets t_start; unreachable
// vertices get kNever. One chronological sweep over the time-edges.
std::vector<Time> earliest_arrivals(const TemporalGraph& g, Vertex s, Time t_start = 1);

// Minimum arrival time of a temporal (s,z)-path; 1 when s = z.
std::optional<Time> earliest_arrival(const TemporalGraph& g, Vertex s, Vertex z);

// Minimum (arrival - start) over temporal (s,z)-paths; 0 when s = z.
std::optional<Time> fastest_duration(const TemporalGraph& g, Vertex s, Vertex z);

// a[v][w] is true iff a temporal (v,w)-path exists; the diagonal is true.
using ConnectivityMatrix = std::vector<std::vector<bool>>;
ConnectivityMatrix connectivity_matrix(const TemporalGraph& g);

}  // namespace chronos
