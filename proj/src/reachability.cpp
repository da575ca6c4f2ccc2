#include "chronos/reachability.hpp"

#include <algorithm>

namespace chronos {

std::vector<Time> earliest_arrivals(const TemporalGraph& g, Vertex s, Time t_start) {
  std::vector<Time> reach(g.vertex_count(), kNever);
  if (s >= g.vertex_count()) return reach;
  reach[s] = std::max<Time>(t_start, 1);
  std::vector<Vertex> queue;
  for (Time t = std::max<Time>(t_start, 1); t <= g.lifetime(); ++t) {
    queue.clear();
    for (const auto& e : g.edges_at(t)) {
      if (reach[e.u] <= t) queue.push_back(e.u);
      if (reach[e.v] <= t) queue.push_back(e.v);
    }
    // Non-strict: edges sharing label t can be chained, so close under E_t.
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& nb : g.neighbors_at(queue[head], t)) {
        if (reach[nb.v] > t) {
          reach[nb.v] = t;
          queue.push_back(nb.v);
        }
      }
    }
  }
  return reach;
}

std::optional<Time> earliest_arrival(const TemporalGraph& g, Vertex s, Vertex z) {
  if (s == z) return Time{1};
  const auto reach = earliest_arrivals(g, s, 1);
  if (z >= reach.size() || reach[z] == kNever) return std::nullopt;
  return reach[z];
}

std::optional<Time> fastest_duration(const TemporalGraph& g, Vertex s, Vertex z) {
  if (s == z) return Time{0};
  if (s >= g.vertex_count() || z >= g.vertex_count()) return std::nullopt;
  std::optional<Time> best;
  Time previous = 0;
  for (const auto& nb : g.neighbors(s)) {
    const Time t0 = nb.t;
    if (t0 == previous) continue;
    previous = t0;
    const auto reach = earliest_arrivals(g, s, t0);
    if (reach[z] == kNever) continue;
    const Time d = reach[z] - t0;
    if (!best || d < *best) best = d;
    if (*best == 0) break;
  }
  return best;
}

ConnectivityMatrix connectivity_matrix(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  ConnectivityMatrix a(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) {
    const auto reach = earliest_arrivals(g, v, 1);
    for (Vertex w = 0; w < n; ++w) a[v][w] = reach[w] != kNever;
    a[v][v] = true;
  }
  return a;
}

}  // namespace chronos
