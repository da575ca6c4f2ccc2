#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// Chordal graph with a colour in [0, k) and a non-negative weight per vertex.
struct ChordalInstance {
  StaticGraph graph;
  std::vector<std::uint32_t> colour;
  std::vector<BigCount> weight;
};

// Rooted clique tree. Every node is a leaf, has one child, or has exactly two
// children whose bags equal its own.
struct CliqueTree {
  struct Node {
    std::vector<Vertex> bag;  // sorted
    std::vector<std::size_t> children;
    std::size_t parent = kNoParent;
  };
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  std::size_t root = kNoParent;  // kNoParent iff the graph is empty

  std::size_t max_bag_size() const;
};

// Maximum cardinality search order; reversed it is a perfect elimination
// ordering iff the graph is chordal.
std::vector<Vertex> maximum_cardinality_search(const StaticGraph& g);
bool is_chordal(const StaticGraph& g);

// Throws not_chordal.
CliqueTree build_clique_tree(const StaticGraph& g);

// Checks: bags are cliques, every edge lies in a bag, the bags containing a
// vertex form a connected subtree, and the node shapes above.
bool check_clique_tree(const StaticGraph& g, const CliqueTree& tree, std::string* why = nullptr);

struct MulticolourStats {
  std::size_t bags = 0;
  std::size_t max_bag = 0;
  std::size_t entries = 0;  // DP entries allocated over the whole run
};

// Sum over independent sets holding exactly one vertex of each colour 0..k-1
// of the product of their weights. Zero-weight vertices are dropped first.
BigCount count_weighted_mc_is(const ChordalInstance& instance, std::uint32_t k,
                              MulticolourStats* stats = nullptr);

}  // namespace chronos
