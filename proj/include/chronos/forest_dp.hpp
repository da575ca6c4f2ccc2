#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// F(v, .) for a fixed vertex v: F(v, t) is the number of temporal paths from
// the source to v arriving at time <= t. Stored as the breakpoints of this
// non-decreasing step function, so a vertex costs O(labels) rather than O(T).
class ArrivalProfile {
 public:
  ArrivalProfile() = default;

  // F(t) = 1 for t >= t_min: the trivial path waiting at the source.
  static ArrivalProfile seed(Time t_min) {
    ArrivalProfile p;
    p.steps_.emplace_back(t_min, BigCount(1));
    return p;
  }

  const BigCount& at(Time t) const;
  bool is_zero() const { return steps_.empty(); }

  // Profile of the next vertex along an edge carrying `labels` (sorted):
  // G(t) = sum over labels t' <= t of F(t').
  ArrivalProfile extend(std::span<const Time> labels) const;

  const std::vector<std::pair<Time, BigCount>>& steps() const { return steps_; }

 private:
  std::vector<std::pair<Time, BigCount>> steps_;  // strictly increasing times, positive values
};

// Unique static path between a and b in the underlying forest (inclusive), or
// empty when they lie in different trees. Throws not_a_forest.
std::vector<Vertex> forest_path(const TemporalGraph& g, Vertex a, Vertex b);

// Realizations of the static path `path` with all labels in [t_min, t_max].
BigCount count_along_path(const TemporalGraph& g, std::span<const Vertex> path, Time t_min, Time t_max);

// Number of temporal (s,z)-paths when the underlying graph is a forest.
BigCount count_forest(const TemporalGraph& g, Vertex s, Vertex z);

// Temporal (a,b)-paths with first label >= t_min and last label <= t_max;
// 1 when a = b.
BigCount count_forest_window(const TemporalGraph& g, Vertex a, Vertex b, Time t_min, Time t_max);

}  // namespace chronos
