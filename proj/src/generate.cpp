#include "chronos/generate.hpp"

#include <algorithm>
#include <numeric>

#include "chronos/error.hpp"
#include "chronos/random.hpp"

namespace chronos::gen {

TemporalGraph random_graph(std::size_t n, std::size_t m, Time T, std::uint64_t seed) {
  if (n < 2 && m > 0) throw Error(ErrorCode::invalid_parameter, "random graph with edges needs n >= 2");
  if (T < 1) throw Error(ErrorCode::invalid_parameter, "T must be >= 1");
  SplitMix64 rng(seed);
  std::vector<TimeEdge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    edges.push_back({u, v, static_cast<Time>(1 + rng.below(T))});
  }
  return TemporalGraph::normalized(n, std::move(edges));
}

TemporalGraph random_forest(std::size_t n, Time T, std::uint64_t seed, unsigned max_labels) {
  if (T < 1 || max_labels < 1) throw Error(ErrorCode::invalid_parameter, "T and max_labels must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<TimeEdge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex parent = ids[rng.below(i)];
    const unsigned count = 1 + static_cast<unsigned>(rng.below(max_labels));
    for (unsigned j = 0; j < count; ++j) edges.push_back({parent, ids[i], static_cast<Time>(1 + rng.below(T))});
  }
  return TemporalGraph::normalized(n, std::move(edges));
}

TemporalGraph diamond_chain(std::size_t l, const std::vector<Time>& labels) {
  if (labels.empty()) throw Error(ErrorCode::invalid_parameter, "diamond chain needs at least one label");
  if (labels.size() != 1 && labels.size() != l) {
    throw Error(ErrorCode::invalid_parameter, "give one label or one per diamond");
  }
  std::vector<TimeEdge> edges;
  for (std::size_t i = 1; i <= l; ++i) {
    const Time t = labels.size() == 1 ? labels[0] : labels[i - 1];
    if (t < 1) throw Error(ErrorCode::invalid_parameter, "labels must be >= 1");
    const auto z0 = static_cast<Vertex>(3 * (i - 1));
    const auto w1 = static_cast<Vertex>(3 * i - 2);
    const auto w2 = static_cast<Vertex>(3 * i - 1);
    const auto z1 = static_cast<Vertex>(3 * i);
    edges.push_back({z0, w1, t});
    edges.push_back({z0, w2, t});
    edges.push_back({w1, z1, t});
    edges.push_back({w2, z1, t});
  }
  return TemporalGraph::normalized(3 * l + 1, std::move(edges));
}

TemporalGraph theta_graph(std::size_t k, std::size_t length, Time label) {
  if (length < 1) throw Error(ErrorCode::invalid_parameter, "path length must be >= 1");
  if (length == 1 && k > 1) throw Error(ErrorCode::invalid_parameter, "only one path can be a direct edge");
  std::vector<TimeEdge> edges;
  Vertex next = 2;
  for (std::size_t p = 0; p < k; ++p) {
    Vertex prev = 0;
    for (std::size_t j = 1; j < length; ++j) {
      edges.push_back({prev, next, label});
      prev = next++;
    }
    edges.push_back({prev, 1, label});
  }
  return TemporalGraph::normalized(next, std::move(edges));
}

TemporalGraph temporal_path(std::size_t n, Time T, std::uint64_t seed, std::size_t double_every) {
  if (n < 2 || T < 1) throw Error(ErrorCode::invalid_parameter, "temporal path needs n >= 2 and T >= 1");
  SplitMix64 rng(seed);
  std::vector<TimeEdge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto t = static_cast<Time>(1 + (static_cast<std::uint64_t>(i) * T) / (n - 1));
    const auto u = static_cast<Vertex>(i);
    edges.push_back({u, u + 1, t});
    // A second label just above the first keeps the order intact but gives
    // the edge two realizations.
    if (double_every && rng.below(double_every) == 0 && t < T) edges.push_back({u, u + 1, t + 1});
  }
  return TemporalGraph(n, std::move(edges), T);
}

TemporalGraph triangle_strip(std::size_t length, std::uint64_t seed, std::size_t double_every) {
  SplitMix64 rng(seed);
  std::vector<TimeEdge> edges;
  edges.reserve(3 * length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto a = static_cast<Vertex>(2 * i);
    const auto b = a + 1;
    const auto next = a + 2;
    const auto t = static_cast<Time>(2 * i + 1);
    edges.push_back({a, next, t});
    if (double_every && rng.below(double_every) == 0) {
      edges.push_back({a, b, t});
      edges.push_back({b, next, t + 1});
    } else {
      // The detour through b runs against time and is never usable.
      edges.push_back({a, b, t + 1});
      edges.push_back({b, next, t});
    }
  }
  return TemporalGraph::normalized(2 * length + 1, std::move(edges));
}

}  // namespace chronos::gen
