#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chronos {

using Vertex = std::uint32_t;
using Time = std::uint32_t;

inline constexpr Vertex kNoVertex = 0xffffffffu;

// An undirected time-edge ({u, v}, t); stored canonically with u < v.
struct TimeEdge {
  Vertex u = 0;
  Vertex v = 0;
  Time t = 0;

  friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
  friend bool operator<(const TimeEdge& a, const TimeEdge& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
};

struct Neighbor {
  Vertex v = 0;
  Time t = 0;
};

// (v, t): the appearance of vertex v at time t.
struct VertexAppearance {
  Vertex v = 0;
  Time t = 0;

  friend auto operator<=>(const VertexAppearance&, const VertexAppearance&) = default;
};

// Static simple graph with dense vertex ids.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t component_count() const;
  bool is_forest() const;

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;  // canonical u < v, sorted
  std::vector<std::vector<Vertex>> adjacency_;    // sorted
};

// Immutable temporal graph G = (V, E, T) on vertices 0..n-1.
//
// Construction canonicalizes and deduplicates time-edges and rejects loops and
// zero labels. Labels are kept as given unless the graph is built through
// normalized(), which renumbers the used labels to 1..T and remembers the
// original values for reporting.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(std::size_t n, std::vector<TimeEdge> edges, Time lifetime = 0);

  // Builds the graph and remaps used labels onto 1..T preserving order.
  static TemporalGraph normalized(std::size_t n, std::vector<TimeEdge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  Time lifetime() const { return lifetime_; }
  bool empty() const { return edges_.empty(); }

  // All time-edges sorted by (t, u, v).
  std::span<const TimeEdge> edges() const { return edges_; }
  std::span<const TimeEdge> edges_at(Time t) const;

  // Incident (neighbor, label) pairs of v sorted by (t, neighbor).
  std::span<const Neighbor> neighbors(Vertex v) const;
  std::span<const Neighbor> neighbors_at(Vertex v, Time t) const;
  std::size_t temporal_degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v, Time t) const;

  // Underlying static graph view: distinct vertex pairs and their labels.
  std::size_t underlying_edge_count() const { return pairs_.size(); }
  std::pair<Vertex, Vertex> underlying_edge(std::size_t id) const { return pairs_[id]; }
  std::span<const Time> labels(std::size_t underlying_id) const;
  // Sorted labels of {u, v}; empty when the pair is not an underlying edge.
  std::span<const Time> labels_between(Vertex u, Vertex v) const;
  // Underlying neighbors of v as (neighbor, underlying edge id), sorted by neighbor.
  std::span<const std::pair<Vertex, std::uint32_t>> underlying_neighbors(Vertex v) const;

  // Label as it appeared in the input (identity unless normalized()).
  Time original_label(Time t) const;
  const std::vector<Time>& original_labels() const { return original_labels_; }

  // True iff every label in 1..T is used.
  bool is_normalized() const;

 private:
  friend class TemporalGraphAccess;
  void build_indices();

  std::size_t n_ = 0;
  Time lifetime_ = 0;
  std::vector<TimeEdge> edges_;
  std::vector<std::size_t> time_offsets_;  // edges_ index per label, size T+2
  std::vector<std::size_t> adj_offsets_;
  std::vector<Neighbor> adj_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::size_t> label_offsets_;
  std::vector<Time> pair_labels_;
  std::vector<std::size_t> uadj_offsets_;
  std::vector<std::pair<Vertex, std::uint32_t>> uadj_;
  std::vector<Time> original_labels_;  // index t -> input label; empty = identity
};

StaticGraph underlying_graph(const TemporalGraph& g);

// Copy keeping time-edges with label in [t_lo, t_hi] and no endpoint in
// `forbidden`. Labels and lifetime are not renormalized.
TemporalGraph restrict(const TemporalGraph& g, Time t_lo, Time t_hi,
                       std::span<const Vertex> forbidden = {});

// Copy without any time-edge whose underlying edge is {u, v}.
TemporalGraph without_edge(const TemporalGraph& g, Vertex u, Vertex v);

// A temporal path ((v_{i-1}, v_i), t_i)_{i=1..k} starting at `source`.
struct TemporalPath {
  struct Hop {
    Vertex to = 0;
    Time t = 0;
    friend auto operator<=>(const Hop&, const Hop&) = default;
  };

  Vertex source = 0;
  std::vector<Hop> hops;

  std::size_t length() const { return hops.size(); }
  Vertex target() const { return hops.empty() ? source : hops.back().to; }
  Time start_time() const { return hops.empty() ? 0 : hops.front().t; }
  Time arrival_time() const { return hops.empty() ? 0 : hops.back().t; }
  std::vector<Vertex> vertices() const;
  bool visits(Vertex v) const;

  friend auto operator<=>(const TemporalPath&, const TemporalPath&) = default;
};

// Checks the path invariants against g: every hop is a time-edge, labels are
// non-decreasing and no vertex repeats. On failure `why` receives a reason.
bool is_valid_path(const TemporalGraph& g, const TemporalPath& path,
                   std::string* why = nullptr);

std::string format_path(const TemporalPath& path, const TemporalGraph* g = nullptr);

}  // namespace chronos
