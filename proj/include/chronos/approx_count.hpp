#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chronos/bigcount.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

inline constexpr std::uint32_t kUncoloured = 0xffffffffu;

// Number of temporal (s,z)-paths whose internal vertices carry every colour
// 0..colours-1 exactly once. colour[v] is ignored for s and z; other vertices
// with kUncoloured cannot be used.
BigCount count_multicoloured(const TemporalGraph& g, Vertex s, Vertex z, const std::vector<std::uint32_t>& colour,
                             std::uint32_t colours);

struct ApproxOptions {
  double trial_constant = 3.0;  // c in r = ceil(c e^(k-1) ln(1/delta) / eps^2)
  unsigned threads = 1;
};

struct Estimate {
  ExactRatio value;
  std::uint64_t trials = 0;  // colourings drawn, summed over path lengths
};

// Trials needed for paths with k edges.
std::uint64_t trial_count(std::uint32_t k, double epsilon, double delta, double trial_constant = 3.0);

// Estimate of the number of temporal (s,z)-paths with exactly k edges by
// colour coding with k-1 colours; exact for k = 1.
Estimate estimate_short(const TemporalGraph& g, Vertex s, Vertex z, std::uint32_t k, double epsilon, double delta,
                        std::uint64_t seed, const ApproxOptions& options = {});

// Sum of estimate_short over k = 1..K with failure budget delta / K each;
// K = k_max or n - 1.
Estimate estimate_total(const TemporalGraph& g, Vertex s, Vertex z, double epsilon, double delta,
                        std::optional<std::uint32_t> k_max, std::uint64_t seed, const ApproxOptions& options = {});

}  // namespace chronos
