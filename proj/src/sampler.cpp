#include "chronos/sampler.hpp"

#include <algorithm>

#include "chronos/approx_count.hpp"
#include "chronos/error.hpp"

namespace chronos {
namespace {

BigCount safe_count(const Counter& counter, const TemporalGraph& g, Vertex s, Vertex z) {
  BigCount c;
  try {
    c = counter(g, s, z);
  } catch (const Error& e) {
    throw Error(ErrorCode::counter_failure, std::string("counter failed: ") + e.what());
  }
  if (c < 0) throw Error(ErrorCode::counter_failure, "counter returned a negative count");
  return c;
}

}  // namespace

std::size_t PathSampler::KeyHash::operator()(const std::vector<std::uint64_t>& k) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : k) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

PathSampler::PathSampler(TemporalGraph g, Vertex s, Vertex z, Counter counter)
    : g_(std::move(g)), s_(s), z_(z), counter_(std::move(counter)) {
  if (s >= g_.vertex_count() || z >= g_.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  total_ = s == z ? BigCount(1) : safe_count(counter_, g_, s, z);
}

const BigCount& PathSampler::completions(Vertex v, Time t, const std::vector<std::uint64_t>& visited) {
  std::vector<std::uint64_t> key;
  key.reserve(visited.size() + 1);
  key.push_back((static_cast<std::uint64_t>(v) << 32) | t);
  key.insert(key.end(), visited.begin(), visited.end());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::vector<Vertex> banned;
  for (Vertex w = 0; w < g_.vertex_count(); ++w) {
    if (visited[w / 64] >> (w % 64) & 1) banned.push_back(w);
  }
  const auto residual = restrict(g_, t, std::max<Time>(g_.lifetime(), t), banned);
  return cache_.emplace(std::move(key), safe_count(counter_, residual, v, z_)).first->second;
}

TemporalPath PathSampler::sample(SplitMix64& rng) {
  if (total_ == 0) throw Error(ErrorCode::no_path, "no temporal path between the given vertices");
  TemporalPath path;
  path.source = s_;
  std::vector<std::uint64_t> visited((g_.vertex_count() + 63) / 64, 0);
  Vertex cur = s_;
  Time now = 1;
  std::vector<std::pair<Neighbor, BigCount>> options;
  while (cur != z_) {
    visited[cur / 64] |= std::uint64_t{1} << (cur % 64);
    options.clear();
    BigCount sum = 0;
    for (const auto& nb : g_.neighbors(cur)) {
      if (nb.t < now || (visited[nb.v / 64] >> (nb.v % 64) & 1)) continue;
      BigCount w = nb.v == z_ ? BigCount(1) : completions(nb.v, nb.t, visited);
      if (w == 0) continue;
      sum += w;
      options.emplace_back(nb, sum);
    }
    if (options.empty()) throw Error(ErrorCode::counter_failure, "no continuation despite a positive count");
    const BigCount pick = rng.below(sum);
    auto chosen = std::upper_bound(options.begin(), options.end(), pick,
                                   [](const BigCount& x, const auto& o) { return x < o.second; });
    path.hops.push_back({chosen->first.v, chosen->first.t});
    cur = chosen->first.v;
    now = chosen->first.t;
  }
  return path;
}

OptimalSampler::OptimalSampler(const TemporalGraph& g, Vertex s, Vertex z, Star star, const Counter& counter) {
  total_ = 0;
  for (auto [lo, hi] : optimal_windows(g, s, z, star)) {
    auto sampler = std::make_unique<PathSampler>(restrict(g, lo, hi), s, z, counter);
    if (sampler->total() == 0) continue;
    total_ += sampler->total();
    prefix_.push_back(total_);
    windows_.push_back(std::move(sampler));
  }
}

TemporalPath OptimalSampler::sample(SplitMix64& rng) {
  if (total_ == 0) throw Error(ErrorCode::no_path, "no optimal temporal path between the given vertices");
  std::size_t i = 0;
  if (windows_.size() > 1) {
    const BigCount pick = rng.below(total_);
    i = static_cast<std::size_t>(std::upper_bound(prefix_.begin(), prefix_.end(), pick) - prefix_.begin());
  }
  return windows_[i]->sample(rng);
}

TemporalPath sample_path(const TemporalGraph& g, Vertex s, Vertex z, const SamplerConfig& config) {
  PathSampler sampler(g, s, z, config.counter);
  SplitMix64 rng(config.seed);
  return sampler.sample(rng);
}

TemporalPath sample_optimal(const TemporalGraph& g, Vertex s, Vertex z, Star star, const SamplerConfig& config) {
  if (s == z) return TemporalPath{s, {}};
  OptimalSampler sampler(g, s, z, star, config.counter);
  SplitMix64 rng(config.seed);
  return sampler.sample(rng);
}

double per_call_epsilon(double delta, std::size_t n) { return delta / (4.0 * static_cast<double>(std::max<std::size_t>(n, 1))); }

Counter approximate_counter(double epsilon, double delta, std::uint64_t seed, unsigned threads) {
  auto calls = std::make_shared<std::uint64_t>(0);
  const SplitMix64 root(seed);
  return [=](const TemporalGraph& g, Vertex s, Vertex z) -> BigCount {
    ApproxOptions options;
    options.threads = threads;
    const auto est = estimate_total(g, s, z, epsilon, delta, std::nullopt, root.split((*calls)++)(), options);
    // Round to nearest.
    BigCount q;
    ExactRatio twice = est.value * 2 + 1;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    q /= 2;
    return q;
  };
}

}  // namespace chronos
