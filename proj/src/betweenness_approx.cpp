#include "chronos/betweenness_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <thread>

#include "chronos/error.hpp"
#include "chronos/oracle.hpp"
#include "chronos/random.hpp"
#include "chronos/reachability.hpp"
#include "chronos/sampler.hpp"

namespace chronos {
namespace {

std::optional<Time> optimum(const TemporalGraph& g, Vertex s, Vertex z, Star star) {
  return star == Star::foremost ? earliest_arrival(g, s, z) : fastest_duration(g, s, z);
}

Counter oracle_counter() {
  return [](const TemporalGraph& g, Vertex s, Vertex z) { return oracle::count_paths_bf(g, s, z); };
}

struct Pair {
  Vertex s, z;
};

}  // namespace

bool zero_check(const TemporalGraph& g, Star star) {
  const auto reach = connectivity_matrix(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
      if (s == z || !reach[s][z]) continue;
      const auto best = optimum(g, s, z, star);
      const auto rest = optimum(without_edge(g, s, z), s, z, star);
      // Without {s,z} every path has an internal vertex.
      if (rest && *rest == *best) return false;
    }
  }
  return true;
}

std::uint64_t betweenness_sample_formula(std::size_t n, Time lifetime, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::invalid_parameter, "epsilon must lie in (0, 1)");
  const double nn = static_cast<double>(n);
  const double ln = n > 1 ? std::log(nn) : 0.0;
  const double value = std::ceil(300000.0 / (epsilon * epsilon * epsilon) * (static_cast<double>(lifetime) + 1.0) *
                                 nn * nn * nn * ln);
  if (value >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(value));
}

std::uint64_t amplification_runs(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::invalid_parameter, "delta must lie in (0, 1)");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(8.0 * std::log10(1.0 / delta) - 1e-9)));
}

BetweennessEstimate estimate_max_betweenness(const TemporalGraph& g, Star star, double epsilon, double delta,
                                             const BetweennessOptions& options) {
  std::uint64_t ell = options.ell ? *options.ell : betweenness_sample_formula(g.vertex_count(), g.lifetime(), epsilon);
  if (options.ell_cap) ell = std::min(ell, *options.ell_cap);
  if (ell == 0) throw Error(ErrorCode::invalid_parameter, "ell must be positive");
  const std::uint64_t runs = options.runs ? *options.runs : amplification_runs(delta);
  if (runs == 0) throw Error(ErrorCode::invalid_parameter, "run count must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::invalid_parameter, "epsilon must lie in (0, 1)");

  BetweennessEstimate result;
  result.ell = ell;
  result.trials = runs;
  result.value = 0;
  if (zero_check(g, star)) return result;

  const Counter counter = options.counter ? options.counter : oracle_counter();
  const std::size_t n = g.vertex_count();
  const auto reach = connectivity_matrix(g);
  std::vector<Pair> pairs;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex z = 0; z < n; ++z) {
      if (s != z && reach[s][z]) pairs.push_back({s, z});
    }
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pairs.size())));
  const SplitMix64 root(options.seed);
  // Pair p is always handled by worker p % threads, so its sampler cache is
  // reused across runs without locking.
  std::vector<std::unique_ptr<OptimalSampler>> samplers(pairs.size());
  std::vector<std::pair<std::uint64_t, Vertex>> run_results;
  for (std::uint64_t run = 0; run < runs; ++run) {
    const SplitMix64 run_rng = root.split(run);
    std::vector<std::vector<std::uint64_t>> per_pair(pairs.size());
    auto work = [&](unsigned worker) {
      for (std::size_t p = worker; p < pairs.size(); p += threads) {
        const auto [s, z] = pairs[p];
        std::vector<std::uint64_t> c(n, 0);
        if (!samplers[p]) samplers[p] = std::make_unique<OptimalSampler>(g, s, z, star, counter);
        SplitMix64 rng = run_rng.split(p);
        for (std::uint64_t i = 0; i < ell; ++i) {
          const auto path = samplers[p]->sample(rng);
          for (std::size_t h = 0; h + 1 < path.hops.size(); ++h) ++c[path.hops[h].to];
        }
        per_pair[p] = std::move(c);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            work(w);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    std::vector<std::uint64_t> total(n, 0);
    for (const auto& c : per_pair) {
      for (std::size_t v = 0; v < n; ++v) total[v] += c[v];
    }
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (total[v] > total[best]) best = v;
    }
    run_results.emplace_back(total[best], best);
  }
  // Lower median; ties broken towards the smaller vertex.
  std::sort(run_results.begin(), run_results.end());
  const auto [count, vertex] = run_results[(run_results.size() - 1) / 2];
  result.value = ExactRatio(big(count), big(ell));
  result.value.canonicalize();
  result.argmax = vertex;
  return result;
}

}  // namespace chronos
