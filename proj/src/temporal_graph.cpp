#include "chronos/temporal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chronos/error.hpp"

namespace chronos {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::loop_edge: return "loop_edge";
    case ErrorCode::invalid_label: return "invalid_label";
    case ErrorCode::invalid_vertex: return "invalid_vertex";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_a_forest: return "not_a_forest";
    case ErrorCode::not_chordal: return "not_chordal";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::explosion: return "explosion";
    case ErrorCode::no_path: return "no_path";
    case ErrorCode::counter_failure: return "counter_failure";
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::no_feasible_algorithm: return "no_feasible_algorithm";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// StaticGraph

StaticGraph::StaticGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges)
    : adjacency_(n) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::loop_edge, "static graph loop at " + std::to_string(u));
    if (u >= n || v >= n) throw Error(ErrorCode::invalid_vertex, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool StaticGraph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t StaticGraph::component_count() const {
  const std::size_t n = vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [u, v] : edges_) {
    const Vertex a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool StaticGraph::is_forest() const {
  return edge_count() + component_count() == vertex_count();
}

// ---------------------------------------------------------------------------
// TemporalGraph

TemporalGraph::TemporalGraph(std::size_t n, std::vector<TimeEdge> edges, Time lifetime)
    : n_(n), lifetime_(lifetime) {
  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::loop_edge, "loop time-edge at vertex " + std::to_string(e.u));
    if (e.t < 1) throw Error(ErrorCode::invalid_label, "time label must be >= 1");
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::invalid_vertex, "time-edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
    lifetime_ = std::max(lifetime_, e.t);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  build_indices();
}

TemporalGraph TemporalGraph::normalized(std::size_t n, std::vector<TimeEdge> edges) {
  std::vector<Time> used;
  used.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.t < 1) throw Error(ErrorCode::invalid_label, "time label must be >= 1");
    used.push_back(e.t);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& e : edges) {
    e.t = static_cast<Time>(std::lower_bound(used.begin(), used.end(), e.t) - used.begin()) + 1;
  }
  TemporalGraph g(n, std::move(edges));
  g.original_labels_.assign(1, 0);
  g.original_labels_.insert(g.original_labels_.end(), used.begin(), used.end());
  return g;
}

void TemporalGraph::build_indices() {
  time_offsets_.assign(static_cast<std::size_t>(lifetime_) + 2, 0);
  for (const auto& e : edges_) ++time_offsets_[e.t + 1];
  for (std::size_t i = 1; i < time_offsets_.size(); ++i) time_offsets_[i] += time_offsets_[i - 1];

  adj_offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++adj_offsets_[e.u + 1];
    ++adj_offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i <= n_; ++i) adj_offsets_[i] += adj_offsets_[i - 1];
  adj_.resize(adj_offsets_[n_]);
  {
    std::vector<std::size_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
    // edges_ is sorted by (t, u, v), so each list comes out sorted by time.
    for (const auto& e : edges_) {
      adj_[fill[e.u]++] = {e.v, e.t};
      adj_[fill[e.v]++] = {e.u, e.t};
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1],
                [](const Neighbor& a, const Neighbor& b) {
                  return a.t != b.t ? a.t < b.t : a.v < b.v;
                });
    }
  }

  std::vector<TimeEdge> by_pair(edges_);
  std::sort(by_pair.begin(), by_pair.end(), [](const TimeEdge& a, const TimeEdge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.t < b.t;
  });
  pairs_.clear();
  pair_labels_.clear();
  label_offsets_.assign(1, 0);
  for (std::size_t i = 0; i < by_pair.size(); ++i) {
    if (i == 0 || by_pair[i].u != by_pair[i - 1].u || by_pair[i].v != by_pair[i - 1].v) {
      if (i != 0) label_offsets_.push_back(pair_labels_.size());
      pairs_.emplace_back(by_pair[i].u, by_pair[i].v);
    }
    pair_labels_.push_back(by_pair[i].t);
  }
  if (!pairs_.empty()) label_offsets_.push_back(pair_labels_.size());

  uadj_offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : pairs_) {
    ++uadj_offsets_[u + 1];
    ++uadj_offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n_; ++i) uadj_offsets_[i] += uadj_offsets_[i - 1];
  uadj_.resize(uadj_offsets_[n_]);
  std::vector<std::size_t> fill(uadj_offsets_.begin(), uadj_offsets_.end() - 1);
  for (std::uint32_t id = 0; id < pairs_.size(); ++id) {
    auto [u, v] = pairs_[id];
    uadj_[fill[u]++] = {v, id};
    uadj_[fill[v]++] = {u, id};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(uadj_.begin() + uadj_offsets_[v], uadj_.begin() + uadj_offsets_[v + 1]);
  }
}

std::span<const TimeEdge> TemporalGraph::edges_at(Time t) const {
  if (t < 1 || t > lifetime_) return {};
  return std::span<const TimeEdge>(edges_).subspan(time_offsets_[t], time_offsets_[t + 1] - time_offsets_[t]);
}

std::span<const Neighbor> TemporalGraph::neighbors(Vertex v) const {
  return std::span<const Neighbor>(adj_).subspan(adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]);
}

std::span<const Neighbor> TemporalGraph::neighbors_at(Vertex v, Time t) const {
  auto all = neighbors(v);
  auto lo = std::partition_point(all.begin(), all.end(), [t](const Neighbor& x) { return x.t < t; });
  auto hi = std::partition_point(lo, all.end(), [t](const Neighbor& x) { return x.t <= t; });
  return {lo, hi};
}

bool TemporalGraph::has_edge(Vertex u, Vertex v, Time t) const {
  if (u >= n_ || v >= n_) return false;
  auto at = neighbors_at(u, t);
  return std::any_of(at.begin(), at.end(), [v](const Neighbor& x) { return x.v == v; });
}

std::span<const Time> TemporalGraph::labels(std::size_t id) const {
  return std::span<const Time>(pair_labels_).subspan(label_offsets_[id], label_offsets_[id + 1] - label_offsets_[id]);
}

std::span<const Time> TemporalGraph::labels_between(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return {};
  auto nb = underlying_neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<Vertex, std::uint32_t>{v, 0});
  if (it == nb.end() || it->first != v) return {};
  return labels(it->second);
}

std::span<const std::pair<Vertex, std::uint32_t>> TemporalGraph::underlying_neighbors(Vertex v) const {
  return std::span<const std::pair<Vertex, std::uint32_t>>(uadj_).subspan(
      uadj_offsets_[v], uadj_offsets_[v + 1] - uadj_offsets_[v]);
}

Time TemporalGraph::original_label(Time t) const {
  if (original_labels_.empty() || t >= original_labels_.size()) return t;
  return original_labels_[t];
}

bool TemporalGraph::is_normalized() const {
  for (Time t = 1; t <= lifetime_; ++t) {
    if (time_offsets_[t] == time_offsets_[t + 1]) return false;
  }
  return true;
}

StaticGraph underlying_graph(const TemporalGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.underlying_edge_count());
  for (std::size_t id = 0; id < g.underlying_edge_count(); ++id) pairs.push_back(g.underlying_edge(id));
  return StaticGraph(g.vertex_count(), std::move(pairs));
}

namespace {

TemporalGraph rebuild_like(const TemporalGraph& g, std::vector<TimeEdge> kept);

}  // namespace

TemporalGraph restrict(const TemporalGraph& g, Time t_lo, Time t_hi, std::span<const Vertex> forbidden) {
  std::vector<char> banned(g.vertex_count(), 0);
  for (Vertex v : forbidden) {
    if (v < banned.size()) banned[v] = 1;
  }
  std::vector<TimeEdge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.t < t_lo || e.t > t_hi) continue;
    if (banned[e.u] || banned[e.v]) continue;
    kept.push_back(e);
  }
  return rebuild_like(g, std::move(kept));
}

TemporalGraph without_edge(const TemporalGraph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  std::vector<TimeEdge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.u == u && e.v == v) continue;
    kept.push_back(e);
  }
  return rebuild_like(g, std::move(kept));
}

// Shares label bookkeeping with the source graph so reports keep the input labels.
class TemporalGraphAccess {
 public:
  static TemporalGraph rebuild(const TemporalGraph& g, std::vector<TimeEdge> kept) {
    TemporalGraph r(g.vertex_count(), std::move(kept), g.lifetime());
    r.original_labels_ = g.original_labels_;
    return r;
  }
};

namespace {

TemporalGraph rebuild_like(const TemporalGraph& g, std::vector<TimeEdge> kept) {
  return TemporalGraphAccess::rebuild(g, std::move(kept));
}

}  // namespace

// ---------------------------------------------------------------------------
// TemporalPath

std::vector<Vertex> TemporalPath::vertices() const {
  std::vector<Vertex> out;
  out.reserve(hops.size() + 1);
  out.push_back(source);
  for (const auto& h : hops) out.push_back(h.to);
  return out;
}

bool TemporalPath::visits(Vertex v) const {
  if (source == v) return true;
  return std::any_of(hops.begin(), hops.end(), [v](const Hop& h) { return h.to == v; });
}

bool is_valid_path(const TemporalGraph& g, const TemporalPath& path, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (path.source >= g.vertex_count()) return fail("source out of range");
  std::vector<char> seen(g.vertex_count(), 0);
  seen[path.source] = 1;
  Vertex cur = path.source;
  Time last = 0;
  for (std::size_t i = 0; i < path.hops.size(); ++i) {
    const auto& h = path.hops[i];
    if (h.to >= g.vertex_count()) return fail("hop target out of range");
    if (!g.has_edge(cur, h.to, h.t)) {
      return fail("hop " + std::to_string(i) + " is not a time-edge");
    }
    if (h.t < last) return fail("labels decrease at hop " + std::to_string(i));
    if (seen[h.to]) return fail("vertex " + std::to_string(h.to) + " repeated");
    seen[h.to] = 1;
    last = h.t;
    cur = h.to;
  }
  return true;
}

std::string format_path(const TemporalPath& path, const TemporalGraph* g) {
  std::ostringstream out;
  out << path.source;
  for (const auto& h : path.hops) {
    out << " -" << (g ? g->original_label(h.t) : h.t) << "-> " << h.to;
  }
  return out.str();
}

}  // namespace chronos
