#pragma once

#include <cstdint>
#include <optional>

#include "chronos/bigcount.hpp"
#include "chronos/reductions.hpp"
#include "chronos/star.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

// True iff no *-optimal path between any ordered pair has an internal vertex.
bool zero_check(const TemporalGraph& g, Star star);

struct BetweennessEstimate {
  ExactRatio value;
  Vertex argmax = 0;
  std::uint64_t ell = 0;     // samples per connected pair
  std::uint64_t trials = 0;  // independent runs whose median is reported
};

struct BetweennessOptions {
  Counter counter;                       // empty: the oracle counter
  std::optional<std::uint64_t> ell;      // overrides the formula
  std::optional<std::uint64_t> ell_cap;  // ell = min(formula, cap)
  std::optional<std::uint64_t> runs;     // overrides the delta-derived count
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// ceil(300000 eps^-3 (T+1) n^3 ln n), saturated at UINT64_MAX.
std::uint64_t betweenness_sample_formula(std::size_t n, Time lifetime, double epsilon);

// ceil(8 log10(1/delta)), at least 1.
std::uint64_t amplification_runs(double delta);

// Median over runs of max_v C[v] / ell, where C[v] counts sampled optimal
// paths with v as an internal vertex, ell samples per connected pair.
// The value is exactly 0 when zero_check holds.
BetweennessEstimate estimate_max_betweenness(const TemporalGraph& g, Star star, double epsilon, double delta,
                                             const BetweennessOptions& options = {});

}  // namespace chronos
