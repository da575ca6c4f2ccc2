#include "chronos/approx_count.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "chronos/error.hpp"
#include "chronos/random.hpp"

namespace chronos {
namespace {

struct Overflow {};

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigCount add(const BigCount& a, const BigCount& b) { return a + b; }

// D[S][v][t]: continuations from coloured v departing at time >= t that reach
// z through vertices whose colours are exactly S. The colourful path count is
// the sum, over the first hop s -> u at time t, of D[all \ c(u)][u][t].
// Summing over colour sets instead of colour orders gives the same total as
// iterating over permutations, with 2^l instead of l! tables.
template <typename Count>
Count multicoloured(const TemporalGraph& g, Vertex s, Vertex z, const std::vector<std::uint32_t>& colour,
                    std::uint32_t colours) {
  const std::size_t n = g.vertex_count();
  const Time T = g.lifetime();
  const std::size_t stride = static_cast<std::size_t>(T) + 2;
  const std::uint32_t full = (1u << colours) - 1;
  auto col = [&](Vertex v) -> std::uint32_t {
    if (v == s || v == z) return kUncoloured;
    return colour[v] < colours ? colour[v] : kUncoloured;
  };
  std::vector<std::vector<Count>> D(std::size_t{1} << colours);
  // Colour sets in order of size so that every S \ c is ready.
  std::vector<std::uint32_t> order(full + 1);
  for (std::uint32_t m = 0; m <= full; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  Count total = 0;
  for (std::uint32_t S : order) {
    if (S == full) break;  // only the first hop needs the full set
    auto& table = D[S];
    table.assign(n * stride, Count(0));
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t cv = col(v);
      if (cv == kUncoloured || (S >> cv & 1)) continue;
      Count* row = &table[v * stride];
      auto nb = g.neighbors(v);
      std::size_t j = nb.size();
      for (Time t = T; t >= 1; --t) {
        Count acc = row[t + 1];
        while (j > 0 && nb[j - 1].t >= t) {
          --j;
          const Vertex u = nb[j].v;
          if (u == z) {
            if (S == 0) acc = add(acc, Count(1));
            continue;
          }
          const std::uint32_t cu = col(u);
          if (cu == kUncoloured || !(S >> cu & 1)) continue;
          const Count& x = D[S ^ (1u << cu)][u * stride + nb[j].t];
          if (x != 0) acc = add(acc, x);
        }
        row[t] = acc;
      }
    }
  }
  for (const auto& nb : g.neighbors(s)) {
    if (nb.v == z) {
      if (colours == 0) total = add(total, Count(1));
      continue;
    }
    const std::uint32_t cu = col(nb.v);
    if (cu == kUncoloured) continue;
    const Count& x = D[full ^ (1u << cu)][nb.v * stride + nb.t];
    if (x != 0) total = add(total, x);
  }
  return total;
}

void check_parameters(double epsilon, double delta) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw Error(ErrorCode::invalid_parameter, "epsilon must be > 0");
  if (!(delta > 0 && delta < 1)) throw Error(ErrorCode::invalid_parameter, "delta must lie in (0, 1)");
}

}  // namespace

BigCount count_multicoloured(const TemporalGraph& g, Vertex s, Vertex z, const std::vector<std::uint32_t>& colour,
                             std::uint32_t colours) {
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (colour.size() != g.vertex_count()) throw Error(ErrorCode::precondition, "colouring must cover every vertex");
  if (colours > 24) throw Error(ErrorCode::invalid_parameter, "too many colours");
  if (s == z) return colours == 0 ? 1 : 0;
  try {
    return big(multicoloured<std::uint64_t>(g, s, z, colour, colours));
  } catch (const Overflow&) {
    return multicoloured<BigCount>(g, s, z, colour, colours);
  }
}

std::uint64_t trial_count(std::uint32_t k, double epsilon, double delta, double trial_constant) {
  check_parameters(epsilon, delta);
  if (k <= 1) return 0;
  const double r = std::ceil(trial_constant * std::exp(static_cast<double>(k - 1)) * std::log(1.0 / delta) /
                             (epsilon * epsilon));
  if (!(r < 1e15)) throw Error(ErrorCode::invalid_parameter, "trial count too large");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
}

Estimate estimate_short(const TemporalGraph& g, Vertex s, Vertex z, std::uint32_t k, double epsilon, double delta,
                        std::uint64_t seed, const ApproxOptions& options) {
  check_parameters(epsilon, delta);
  if (k < 1) throw Error(ErrorCode::invalid_parameter, "k must be >= 1");
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  Estimate est{0, 0};
  if (s == z) return est;
  if (k == 1) {
    est.value = static_cast<unsigned long>(g.labels_between(s, z).size());
    return est;
  }
  const std::uint32_t colours = k - 1;
  if (colours > 24) throw Error(ErrorCode::invalid_parameter, "k too large for colour coding");
  if (g.vertex_count() < 2 || colours > g.vertex_count() - 2) return est;  // not enough internal vertices

  const std::uint64_t r = trial_count(k, epsilon, delta, options.trial_constant);
  const SplitMix64 root(seed);
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(r, 256))));
  std::vector<BigCount> partial(threads, 0);
  auto work = [&](unsigned w) {
    std::vector<std::uint32_t> colour(g.vertex_count(), kUncoloured);
    BigCount sum = 0;
    std::uint64_t small = 0;
    for (std::uint64_t i = w; i < r; i += threads) {
      SplitMix64 rng = root.split(i);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        colour[v] = (v == s || v == z) ? kUncoloured : static_cast<std::uint32_t>(rng.below(colours));
      }
      try {
        const std::uint64_t c = multicoloured<std::uint64_t>(g, s, z, colour, colours);
        if (__builtin_add_overflow(small, c, &small)) {
          sum += big(small - c);
          small = c;
        }
      } catch (const Overflow&) {
        sum += multicoloured<BigCount>(g, s, z, colour, colours);
      }
    }
    partial[w] = sum + big(small);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BigCount total = 0;
  for (const auto& p : partial) total += p;

  // A fixed set of k-1 internal vertices is colourful with probability
  // (k-1)! / (k-1)^(k-1).
  BigCount power, factorial;
  mpz_ui_pow_ui(power.get_mpz_t(), colours, colours);
  mpz_fac_ui(factorial.get_mpz_t(), colours);
  est.value = ExactRatio(total * power, factorial * big(r));
  est.value.canonicalize();
  est.trials = r;
  return est;
}

Estimate estimate_total(const TemporalGraph& g, Vertex s, Vertex z, double epsilon, double delta,
                        std::optional<std::uint32_t> k_max, std::uint64_t seed, const ApproxOptions& options) {
  check_parameters(epsilon, delta);
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  Estimate est{0, 0};
  if (s == z) {
    est.value = 1;
    return est;
  }
  const std::uint32_t K =
      k_max ? *k_max : static_cast<std::uint32_t>(g.vertex_count() > 0 ? g.vertex_count() - 1 : 0);
  const SplitMix64 root(seed);
  for (std::uint32_t k = 1; k <= K; ++k) {
    auto part = estimate_short(g, s, z, k, epsilon, delta / K, root.split(k)(), options);
    est.value += part.value;
    est.trials += part.trials;
  }
  est.value.canonicalize();
  return est;
}

}  // namespace chronos
