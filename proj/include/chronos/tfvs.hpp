#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// Timed feedback vertex set: appearances whose incident time-edges, once
// deleted, leave a temporal graph with a forest as underlying graph.
using TimedFVS = std::vector<VertexAppearance>;

bool is_timed_fvs(const TemporalGraph& g, const TimedFVS& x);

// Temporal graph without the time-edges that touch an appearance in x.
TemporalGraph remove_appearances(const TemporalGraph& g, const TimedFVS& x);

struct TfvsSearchOptions {
  std::optional<std::size_t> max_size;  // give up beyond this size
  std::uint64_t node_limit = 2'000'000;  // branching nodes over all rounds
};

// Minimum timed FVS by iterative deepening: branch on every appearance that
// deletes a time-edge of a shortest residual cycle. Throws budget_exceeded.
TimedFVS compute_timed_fvs(const TemporalGraph& g, const TfvsSearchOptions& options = {});

// Minimum timed FVS by trying all subsets of endpoint appearances of size up
// to max_size; nullopt if none is that small.
std::optional<TimedFVS> minimum_timed_fvs_bf(const TemporalGraph& g, std::size_t max_size);

// Some valid timed FVS, not necessarily minimum: break shortest cycles
// greedily, then drop redundant appearances.
TimedFVS greedy_timed_fvs(const TemporalGraph& g);

// Whitespace separated "v t" pairs, '#' comments allowed. Labels are the
// ones of the input file and are mapped through g's original labels.
TimedFVS parse_timed_fvs(const std::string& text, const TemporalGraph& g);

struct Preprocessed {
  TemporalGraph g;
  Vertex s = 0;
  Vertex z = 0;
};

// Makes the source a leaf whose only time-edge has label 1 and the target a
// leaf whose only time-edge has label T, adding a fresh vertex on each side
// that does not already conform. Path counts are preserved.
Preprocessed preprocess_terminals(const TemporalGraph& g, Vertex s, Vertex z);

struct TfvsStats {
  std::size_t x_size = 0;
  std::uint64_t patterns = 0;           // complete traversal patterns evaluated
  std::uint64_t nonzero_patterns = 0;
  std::uint64_t chordal_vertices = 0;   // summed over patterns
  bool greedy_fallback = false;
};

// Temporal (s,z)-path count by summing over traversal patterns of a timed
// FVS. If x is absent one is computed; when the exact search runs out of
// budget, subsets of size <= 3 are tried and then the greedy set. A supplied x
// must be valid for g.
BigCount count_tfvs(const TemporalGraph& g, Vertex s, Vertex z, const std::optional<TimedFVS>& x = std::nullopt,
                    TfvsStats* stats = nullptr, const TfvsSearchOptions& search = {});

}  // namespace chronos
