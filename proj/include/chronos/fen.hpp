#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// Repeatedly deletes the time-edges of vertices other than s and z whose
// underlying degree is at most one. Vertex ids are kept. Either terminal may
// be kNoVertex.
TemporalGraph prune_degree_one(const TemporalGraph& g, Vertex s, Vertex z);

// Edges outside a BFS spanning forest; its size m - n + components is the
// feedback edge number.
std::vector<std::pair<Vertex, Vertex>> feedback_edge_set(const StaticGraph& g);

std::size_t feedback_edge_number(const TemporalGraph& g);

// Pruned underlying graph split at the terminals (feedback edge endpoints,
// vertices of degree >= 3, s and z) into links: the feedback edges and the
// maximal paths of the remaining forest.
struct CondensedGraph {
  struct Link {
    std::vector<Vertex> vertices;  // static walk from one terminal to another
    bool feedback = false;
  };
  std::vector<Vertex> terminals;
  std::vector<Link> links;
  std::size_t f = 0;                               // feedback edges
  std::size_t path_links() const { return links.size() - f; }
};

CondensedGraph condense(const TemporalGraph& g, Vertex s, Vertex z);

struct FenStats {
  std::size_t f = 0;
  std::size_t path_links = 0;
  std::uint64_t candidates = 0;  // link traversals tried by the enumeration
  std::uint64_t sequences = 0;   // static s-z paths reached
};

struct FenOptions {
  // Enumeration cap is candidate_factor * 8^f * (f + 2)!.
  double candidate_factor = 256.0;
};

// Temporal (s,z)-path count: enumerate static s-z paths as simple walks over
// the condensed links and count the realizations of each with the forest DP.
BigCount count_fen(const TemporalGraph& g, Vertex s, Vertex z, FenStats* stats = nullptr,
                   const FenOptions& options = {});

}  // namespace chronos
