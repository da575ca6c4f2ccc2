#include "chronos/forest_dp.hpp"

#include <algorithm>

#include "chronos/error.hpp"

namespace chronos {
namespace {

const BigCount kZero = 0;

void require_forest(const TemporalGraph& g) {
  if (!underlying_graph(g).is_forest()) throw Error(ErrorCode::not_a_forest, "underlying graph has a cycle");
}

}  // namespace

const BigCount& ArrivalProfile::at(Time t) const {
  auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                             [](Time x, const std::pair<Time, BigCount>& s) { return x < s.first; });
  if (it == steps_.begin()) return kZero;
  return std::prev(it)->second;
}

ArrivalProfile ArrivalProfile::extend(std::span<const Time> labels) const {
  ArrivalProfile out;
  if (steps_.empty()) return out;
  BigCount total = 0;
  std::size_t j = 0;  // first step with time > current label
  for (Time t : labels) {
    while (j < steps_.size() && steps_[j].first <= t) ++j;
    if (j == 0) continue;
    total += steps_[j - 1].second;
    if (!out.steps_.empty() && out.steps_.back().first == t) {
      out.steps_.back().second = total;
    } else {
      out.steps_.emplace_back(t, total);
    }
  }
  return out;
}

std::vector<Vertex> forest_path(const TemporalGraph& g, Vertex a, Vertex b) {
  require_forest(g);
  if (a >= g.vertex_count() || b >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (a == b) return {a};
  std::vector<Vertex> parent(g.vertex_count(), kNoVertex);
  parent[a] = a;
  std::vector<Vertex> queue{a};
  for (std::size_t head = 0; head < queue.size() && parent[b] == kNoVertex; ++head) {
    for (auto [w, id] : g.underlying_neighbors(queue[head])) {
      (void)id;
      if (parent[w] != kNoVertex) continue;
      parent[w] = queue[head];
      queue.push_back(w);
    }
  }
  if (parent[b] == kNoVertex) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

BigCount count_along_path(const TemporalGraph& g, std::span<const Vertex> path, Time t_min, Time t_max) {
  if (path.empty()) return 0;
  if (path.size() == 1) return 1;
  ArrivalProfile f = ArrivalProfile::seed(t_min);
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto labels = g.labels_between(path[i - 1], path[i]);
    auto hi = std::upper_bound(labels.begin(), labels.end(), t_max);
    f = f.extend(labels.first(static_cast<std::size_t>(hi - labels.begin())));
    if (f.is_zero()) return 0;
  }
  return f.at(t_max);
}

BigCount count_forest(const TemporalGraph& g, Vertex s, Vertex z) {
  if (s == z) {
    require_forest(g);
    return 1;
  }
  const auto path = forest_path(g, s, z);
  if (path.empty()) return 0;
  return count_along_path(g, path, 1, std::max<Time>(g.lifetime(), 1));
}

BigCount count_forest_window(const TemporalGraph& g, Vertex a, Vertex b, Time t_min, Time t_max) {
  if (t_min < 1 || t_min > t_max) throw Error(ErrorCode::precondition, "window must satisfy 1 <= t_min <= t_max");
  if (a == b) {
    require_forest(g);
    return 1;
  }
  const auto path = forest_path(g, a, b);
  if (path.empty()) return 0;
  return count_along_path(g, path, t_min, t_max);
}

}  // namespace chronos
