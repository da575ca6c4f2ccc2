#pragma once

#include <cstddef>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// F_t = vertices with an incident time-edge at some i <= t and some j >= t.
struct VIMSequence {
  std::vector<std::vector<Vertex>> bags;  // bags[t - 1] = F_t, each sorted
  std::size_t width = 0;
};

VIMSequence vim_sequence(const TemporalGraph& g);

// max_t |F_t| without materializing the bags.
std::size_t vim_width(const TemporalGraph& g);

// histogram[k] = number of t in [1, T] with |F_t| = k.
std::vector<std::size_t> vim_bag_histogram(const TemporalGraph& g);

// Number of temporal (s,z)-paths by dynamic programming over the bags. The
// state after time t is (v, X): a path ending at v by time t whose vertices
// still alive in F_t, other than v, are exactly X.
BigCount count_vimw(const TemporalGraph& g, Vertex s, Vertex z);

}  // namespace chronos
