#include "chronos/oracle.hpp"

#include <algorithm>

#include "chronos/error.hpp"

namespace chronos::oracle {
namespace {

class Walker {
 public:
  Walker(const TemporalGraph& g, Vertex s, const std::function<void(const TemporalPath&)>& visit)
      : g_(g), visit_(visit), on_path_(g.vertex_count(), 0) {
    path_.source = s;
  }

  void run() {
    on_path_[path_.source] = 1;
    extend(path_.source, 1);
  }

 private:
  void extend(Vertex cur, Time now) {
    visit_(path_);
    for (const auto& nb : g_.neighbors(cur)) {
      if (nb.t < now || on_path_[nb.v]) continue;
      on_path_[nb.v] = 1;
      path_.hops.push_back({nb.v, nb.t});
      extend(nb.v, nb.t);
      path_.hops.pop_back();
      on_path_[nb.v] = 0;
    }
  }

  const TemporalGraph& g_;
  const std::function<void(const TemporalPath&)>& visit_;
  std::vector<char> on_path_;
  TemporalPath path_;
};

// Per-target statistics of the optimal paths from one source.
struct Best {
  bool found = false;
  Time value = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> through;  // optimal paths visiting each vertex
};

Time measure(const TemporalPath& p, Star star) {
  return star == Star::foremost ? p.arrival_time() : p.arrival_time() - p.start_time();
}

std::vector<Best> optimal_stats_from(const TemporalGraph& g, Vertex s, Star star) {
  std::vector<Best> best(g.vertex_count());
  for (auto& b : best) b.through.assign(g.vertex_count(), 0);
  for_each_path_from(g, s, [&](const TemporalPath& p) {
    if (p.hops.empty()) return;
    auto& b = best[p.target()];
    const Time m = measure(p, star);
    if (!b.found || m < b.value) {
      b.found = true;
      b.value = m;
      b.count = 0;
      std::fill(b.through.begin(), b.through.end(), 0);
    }
    if (m != b.value) return;
    ++b.count;
    ++b.through[p.source];
    for (const auto& h : p.hops) ++b.through[h.to];
  });
  return best;
}

}  // namespace

void for_each_path_from(const TemporalGraph& g, Vertex s,
                        const std::function<void(const TemporalPath&)>& visit) {
  if (s >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "source out of range");
  Walker(g, s, visit).run();
}

PathSet enumerate_paths(const TemporalGraph& g, Vertex s, Vertex z, std::optional<std::uint64_t> limit) {
  if (z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "target out of range");
  PathSet out;
  for_each_path_from(g, s, [&](const TemporalPath& p) {
    if (p.target() != z) return;
    if (limit && out.size() >= *limit) {
      throw Error(ErrorCode::explosion, "more than " + std::to_string(*limit) + " paths");
    }
    out.push_back(p);
  });
  return out;
}

BigCount count_paths_bf(const TemporalGraph& g, Vertex s, Vertex z) {
  if (z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "target out of range");
  std::uint64_t count = 0;
  for_each_path_from(g, s, [&](const TemporalPath& p) {
    if (p.target() == z) ++count;
  });
  return big(count);
}

BigCount count_paths_limited(const TemporalGraph& g, Vertex s, Vertex z, std::uint64_t limit) {
  if (z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "target out of range");
  std::uint64_t count = 0;
  std::uint64_t visited = 0;
  for_each_path_from(g, s, [&](const TemporalPath& p) {
    if (++visited > limit) {
      throw Error(ErrorCode::explosion, "search exceeded " + std::to_string(limit) + " partial paths");
    }
    if (p.target() == z) ++count;
  });
  return big(count);
}

BigCount count_optimal_bf(const TemporalGraph& g, Vertex s, Vertex z, Star star) {
  if (s == z) return 1;
  const auto best = optimal_stats_from(g, s, star);
  return big(best.at(z).count);
}

std::pair<BigCount, BigCount> sigma_bf(const TemporalGraph& g, Vertex s, Vertex z, Vertex v, Star star) {
  if (s == z) return {1, 1};
  const auto best = optimal_stats_from(g, s, star);
  const auto& b = best.at(z);
  return {big(b.count), big(b.through.at(v))};
}

std::vector<ExactRatio> betweenness_all_bf(const TemporalGraph& g, Star star) {
  const std::size_t n = g.vertex_count();
  std::vector<ExactRatio> c(n, ExactRatio(0));
  for (Vertex s = 0; s < n; ++s) {
    const auto best = optimal_stats_from(g, s, star);
    for (Vertex z = 0; z < n; ++z) {
      if (z == s || !best[z].found) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == s || v == z || best[z].through[v] == 0) continue;
        c[v] += ExactRatio(big(best[z].through[v]), big(best[z].count));
      }
    }
  }
  for (auto& x : c) x.canonicalize();
  return c;
}

ExactRatio betweenness_bf(const TemporalGraph& g, Vertex v, Star star) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  return betweenness_all_bf(g, star)[v];
}

bool has_internal_optimal_path_bf(const TemporalGraph& g, Star star) {
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto best = optimal_stats_from(g, s, star);
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
      if (z == s || !best[z].found) continue;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != s && v != z && best[z].through[v] > 0) return true;
      }
    }
  }
  return false;
}

}  // namespace chronos::oracle
