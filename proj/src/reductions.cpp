#include "chronos/reductions.hpp"

#include "chronos/error.hpp"
#include "chronos/reachability.hpp"

namespace chronos {

std::vector<std::pair<Time, Time>> optimal_windows(const TemporalGraph& g, Vertex s, Vertex z, Star star) {
  if (s == z) throw Error(ErrorCode::precondition, "optimal counting needs s != z");
  std::vector<std::pair<Time, Time>> windows;
  if (star == Star::foremost) {
    if (auto t = earliest_arrival(g, s, z)) windows.emplace_back(1, *t);
    return windows;
  }
  const auto tf = fastest_duration(g, s, z);
  if (!tf) return windows;
  // A path inside [t0, t0 + t_f] has duration exactly t_f, so it departs at
  // t0; windows where s has no edge at t0 contribute nothing.
  Time previous = 0;
  for (const auto& nb : g.neighbors(s)) {
    if (nb.t == previous) continue;
    previous = nb.t;
    if (nb.t + *tf > g.lifetime()) break;
    windows.emplace_back(nb.t, nb.t + *tf);
  }
  return windows;
}

BigCount count_optimal(const TemporalGraph& g, Vertex s, Vertex z, Star star, const Counter& counter) {
  BigCount total = 0;
  for (auto [lo, hi] : optimal_windows(g, s, z, star)) total += counter(restrict(g, lo, hi), s, z);
  return total;
}

BigCount count_foremost(const TemporalGraph& g, Vertex s, Vertex z, const Counter& counter) {
  return count_optimal(g, s, z, Star::foremost, counter);
}

BigCount count_fastest(const TemporalGraph& g, Vertex s, Vertex z, const Counter& counter) {
  return count_optimal(g, s, z, Star::fastest, counter);
}

std::pair<BigCount, BigCount> sigma_through(const TemporalGraph& g, Vertex s, Vertex z, Vertex v, Star star,
                                            const Counter& counter) {
  if (v == s || v == z) throw Error(ErrorCode::precondition, "sigma_through needs v outside {s, z}");
  BigCount all = 0, avoiding = 0;
  const Vertex banned[1] = {v};
  for (auto [lo, hi] : optimal_windows(g, s, z, star)) {
    all += counter(restrict(g, lo, hi), s, z);
    avoiding += counter(restrict(g, lo, hi, banned), s, z);
  }
  return {all, all - avoiding};
}

ExactRatio betweenness_exact(const TemporalGraph& g, Vertex v, Star star, const Counter& counter) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  ExactRatio total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (s == v) continue;
    const auto reach = earliest_arrivals(g, s, 1);
    if (reach[v] == kNever) continue;  // no path from s can visit v
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
      if (z == s || z == v || reach[z] == kNever) continue;
      auto [sigma, through] = sigma_through(g, s, z, v, star, counter);
      if (through != 0) total += ExactRatio(through, sigma);
    }
  }
  total.canonicalize();
  return total;
}

}  // namespace chronos
