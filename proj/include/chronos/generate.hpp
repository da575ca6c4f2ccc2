#pragma once

#include <cstdint>
#include <vector>

#include "chronos/temporal_graph.hpp"

namespace chronos::gen {

// m time-edges with uniform endpoints (u != v) and labels in [1, T];
// duplicates collapse, the result is normalized.
TemporalGraph random_graph(std::size_t n, std::size_t m, Time T, std::uint64_t seed);

// Uniform random recursive tree on n vertices with shuffled ids; every edge
// gets 1..max_labels labels from [1, T].
TemporalGraph random_forest(std::size_t n, Time T, std::uint64_t seed, unsigned max_labels = 3);

// Chain of diamonds between s = 0 and z = 3l. Diamond i (1-based) joins
// z_{i-1} = 3(i-1) to z_i = 3i through w_i = 3i-2 and w'_i = 3i-1; all four
// edges carry labels[i-1] (a single label is reused for every diamond).
TemporalGraph diamond_chain(std::size_t l, const std::vector<Time>& labels = {1});

// k internally disjoint paths of `length` edges between 0 and 1, all at `label`.
TemporalGraph theta_graph(std::size_t k, std::size_t length, Time label = 1);

// Path 0 - 1 - ... - (n-1) whose labels rise from 1 to T along the path;
// roughly one edge in `double_every` gets a second equal label.
TemporalGraph temporal_path(std::size_t n, Time T, std::uint64_t seed, std::size_t double_every = 1000);

// Strip of `length` triangles with vimw 3 and lifetime 2*length + 1. Vertex
// a_i = 2i, b_i = 2i + 1; the count from a_0 to a_length stays small (each
// triangle has one route, a few random ones have two).
TemporalGraph triangle_strip(std::size_t length, std::uint64_t seed, std::size_t double_every = 64);

}  // namespace chronos::gen
