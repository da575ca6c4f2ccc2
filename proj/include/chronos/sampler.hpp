#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "chronos/random.hpp"
#include "chronos/reductions.hpp"
#include "chronos/star.hpp"
#include "chronos/temporal_graph.hpp"

namespace chronos {

struct SamplerConfig {
  Counter counter;       // exact or approximate (s,z)-path counter
  double delta = 0.0;    // sampling tolerance, used to size approximate counters
  std::uint64_t seed = 0;
};

// Draws (s,z)-paths by first-edge self-reduction: from the current vertex
// every usable time-edge (v, t) is weighted by the number of (v,z)-paths in
// the instance without earlier labels and without the vertices visited so
// far. Completion counts are cached, so repeated draws on one instance are
// cheap. Exactly uniform with an exact counter.
class PathSampler {
 public:
  PathSampler(TemporalGraph g, Vertex s, Vertex z, Counter counter);

  // Total number of (s,z)-paths according to the counter.
  const BigCount& total() const { return total_; }

  // Throws no_path when total() is zero.
  TemporalPath sample(SplitMix64& rng);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const;
  };
  const BigCount& completions(Vertex v, Time t, const std::vector<std::uint64_t>& visited);

  TemporalGraph g_;
  Vertex s_, z_;
  Counter counter_;
  BigCount total_;
  std::unordered_map<std::vector<std::uint64_t>, BigCount, KeyHash> cache_;
};

// Uniform over the foremost or fastest (s,z)-paths: restrict to the optimal
// window(s), pick a window proportionally to its count, then sample inside.
class OptimalSampler {
 public:
  OptimalSampler(const TemporalGraph& g, Vertex s, Vertex z, Star star, const Counter& counter);

  const BigCount& total() const { return total_; }
  TemporalPath sample(SplitMix64& rng);

 private:
  std::vector<std::unique_ptr<PathSampler>> windows_;
  std::vector<BigCount> prefix_;  // running totals over windows
  BigCount total_;
};

TemporalPath sample_path(const TemporalGraph& g, Vertex s, Vertex z, const SamplerConfig& config);
TemporalPath sample_optimal(const TemporalGraph& g, Vertex s, Vertex z, Star star, const SamplerConfig& config);

// Counter backed by estimate_total with accuracy epsilon per call. Each call
// draws a fresh seed from `seed` in call order, so a fixed call sequence is
// reproducible. The estimate is rounded to the nearest integer.
Counter approximate_counter(double epsilon, double delta, std::uint64_t seed, unsigned threads = 1);

// Per-call accuracy delta / (4n) for sampling within tolerance delta.
double per_call_epsilon(double delta, std::size_t n);

}  // namespace chronos
