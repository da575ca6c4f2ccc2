// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "chronos/approx_count.hpp"
#include "chronos/betweenness_approx.hpp"
#include "chronos/chordal.hpp"
#include "chronos/fen.hpp"
#include "chronos/forest_dp.hpp"
#include "chronos/io.hpp"
#include "chronos/oracle.hpp"
#include "chronos/reductions.hpp"
#include "chronos/sampler.hpp"
#include "chronos/tfvs.hpp"
#include "chronos/vimw.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace chronos;
using namespace chronos::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Counter kVimw = [](const TemporalGraph& g, Vertex s, Vertex z) { return count_vimw(g, s, z); };
const Counter kOracle = [](const TemporalGraph& g, Vertex s, Vertex z) { return oracle::count_paths_bf(g, s, z); };

// The criterion-1 corpus: 300 random instances and 50 structured ones.
std::vector<CorpusItem> corpus() {
  std::vector<CorpusItem> items;
  for (std::uint64_t seed = 0; seed < 300; ++seed) items.push_back(random_item(seed));
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 6 + i % 9;
    items.push_back({gen::random_forest(n, 1 + i % 6, 1000 + i), 0, static_cast<Vertex>(n - 1)});
  }
  for (std::uint64_t i = 0; i < 15; ++i) {
    items.push_back({gen::theta_graph(2 + i % 3, 2 + i % 3, 1), 0, 1});
  }
  for (std::uint64_t i = 0; i < 15; ++i) {
    const std::size_t l = 1 + i % 5;
    std::vector<Time> labels{1};
    if (i % 2) {
      labels.clear();
      for (std::size_t j = 0; j < l; ++j) labels.push_back(static_cast<Time>(l - j + (j % 2)));
    }
    items.push_back({gen::diamond_chain(l, labels), 0, static_cast<Vertex>(3 * l)});
  }
  return items;
}

struct Report {
  int failures = 0;
  void line(int id, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void criterion1(Report& r, const std::vector<CorpusItem>& items) {
  const auto t0 = Clock::now();
  int mismatches = 0, forests = 0;
  for (const auto& it : items) {
    const auto truth = oracle::count_paths_bf(it.g, it.s, it.z);
    mismatches += count_vimw(it.g, it.s, it.z) != truth;
    mismatches += count_fen(it.g, it.s, it.z) != truth;
    mismatches += count_tfvs(it.g, it.s, it.z) != truth;
    if (underlying_graph(it.g).is_forest()) {
      ++forests;
      mismatches += count_forest(it.g, it.s, it.z) != truth;
    }
  }
  const double secs = seconds_since(t0);
  r.line(1, mismatches == 0 && secs < 300,
         fmt("%zu instances (%d forests), %d mismatches, %.1f s", items.size(), forests, mismatches, secs));
}

void criterion2(Report& r) {
  int bad = 0;
  for (std::size_t l = 1; l <= 20; ++l) {
    const auto g = gen::diamond_chain(l);
    const BigCount want = BigCount(1) << l;
    const Vertex z = static_cast<Vertex>(3 * l);
    bad += count_vimw(g, 0, z) != want;
    bad += count_fen(g, 0, z) != want;
    if (l <= 12) bad += oracle::count_paths_bf(g, 0, z) != want;
  }
  r.line(2, bad == 0, fmt("l = 1..20 via vimw and fen, oracle up to 12, %d mismatches", bad));
}

void criterion3(Report& r, const std::vector<CorpusItem>& items) {
  int bad = 0;
  for (const auto& it : items) {
    bad += count_foremost(it.g, it.s, it.z, kVimw) != oracle::count_optimal_bf(it.g, it.s, it.z, Star::foremost);
    bad += count_fastest(it.g, it.s, it.z, kVimw) != oracle::count_optimal_bf(it.g, it.s, it.z, Star::fastest);
  }
  r.line(3, bad == 0, fmt("%zu instances, foremost and fastest, %d mismatches", items.size(), bad));
}

void criterion4(Report& r, const std::vector<CorpusItem>& items) {
  int bad = 0, checked = 0;
  for (const auto& it : items) {
    if (it.g.vertex_count() > 8) continue;
    ++checked;
    for (Star star : {Star::foremost, Star::fastest}) {
      const auto expected = oracle::betweenness_all_bf(it.g, star);
      for (Vertex v = 0; v < it.g.vertex_count(); ++v) bad += betweenness_exact(it.g, v, star, kVimw) != expected[v];
    }
  }
  r.line(4, bad == 0 && checked > 0, fmt("%d instances with n <= 8, both stars, %d mismatches", checked, bad));
}

void criterion5(Report& r) {
  int bad = 0, bound = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed ^ 0x5eed);
    const std::size_t n = 1 + rng.below(14);
    const std::uint32_t k = static_cast<std::uint32_t>(1 + rng.below(4));
    ChordalInstance inst{random_chordal(n, rng()), {}, {}};
    for (std::size_t v = 0; v < n; ++v) {
      inst.colour.push_back(static_cast<std::uint32_t>(rng.below(k)));
      inst.weight.push_back(BigCount(static_cast<unsigned long>(rng.below(10))));
    }
    MulticolourStats stats;
    bad += count_weighted_mc_is(inst, k, &stats) != mc_is_brute_force(inst, k);
    bound += stats.entries > (std::size_t{1} << k) * stats.bags * (stats.max_bag + 1);
  }
  r.line(5, bad == 0 && bound == 0, fmt("200 chordal instances, %d mismatches, %d entry-bound violations", bad, bound));
}

std::uint64_t paths_of_length(const TemporalGraph& g, Vertex s, Vertex z, std::size_t k) {
  std::uint64_t c = 0;
  for (const auto& p : oracle::enumerate_paths(g, s, z)) c += p.length() == k;
  return c;
}

void criterion6(Report& r) {
  const auto t0 = Clock::now();
  int instances = 0, failing = 0, worst = 50;
  std::map<std::uint32_t, int> by_k;
  for (std::uint64_t seed = 0; instances < 20 && seed < 2000; ++seed) {
    const auto it = random_item(seed);
    // Four instances for each path length 2..6.
    const std::uint32_t k = 2 + instances % 5;
    const std::uint64_t truth = paths_of_length(it.g, it.s, it.z, k);
    if (truth == 0) continue;
    ++instances;
    ++by_k[k];
    int hits = 0;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
      const double v = estimate_short(it.g, it.s, it.z, k, 0.25, 0.1, rep * 7919 + seed).value.get_d();
      hits += std::abs(v - static_cast<double>(truth)) <= 0.25 * static_cast<double>(truth);
    }
    worst = std::min(worst, hits);
    failing += hits < 45;
  }
  std::string ks;
  for (auto [k, c] : by_k) ks += fmt(" k=%u:%d", k, c);
  r.line(6, instances == 20 && failing == 0,
         fmt("%d instances (%s), worst %d/50 within eps, %.1f s", instances, ks.c_str() + 1, worst,
             seconds_since(t0)));
}

void criterion7(Report& r) {
  int instances = 0;
  double worst = 0;
  for (std::uint64_t seed = 0; instances < 10 && seed < 1000; ++seed) {
    const auto it = random_item(seed);
    const auto all = oracle::enumerate_paths(it.g, it.s, it.z);
    if (all.size() < 2 || all.size() > 50) continue;
    ++instances;
    PathSampler sampler(it.g, it.s, it.z, kOracle);
    std::map<TemporalPath, int> h;
    const SplitMix64 root(seed);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
      SplitMix64 rng = root.split(i);
      ++h[sampler.sample(rng)];
    }
    double tv = 0;
    std::size_t seen = 0;
    for (const auto& p : all) {
      auto f = h.find(p);
      const double freq = f == h.end() ? 0.0 : f->second / static_cast<double>(draws);
      seen += f != h.end();
      tv += std::abs(freq - 1.0 / static_cast<double>(all.size()));
    }
    if (seen != h.size()) tv = 2;  // sampled something that is not a path
    worst = std::max(worst, tv / 2);
  }
  r.line(7, instances == 10 && worst <= 0.05, fmt("%d instances, 100000 samples each, max TV %.4f", instances, worst));
}

void criterion8(Report& r) {
  // (a) zero_check against the definition.
  int zero_bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto it = random_item(seed, 8, 18, 6);
    for (Star star : {Star::foremost, Star::fastest}) {
      zero_bad += zero_check(it.g, star) == oracle::has_internal_optimal_path_bf(it.g, star);
    }
  }
  // (c) precondition on non-zero instances of the criterion-1 corpus.
  int pre_bad = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto it = random_item(seed);
    if (it.g.vertex_count() > 8) continue;
    for (Star star : {Star::foremost, Star::fastest}) {
      const auto c = oracle::betweenness_all_bf(it.g, star);
      const auto best = *std::max_element(c.begin(), c.end());
      if (best != 0 && best < ExactRatio(big(1), big(it.g.vertex_count() * (it.g.lifetime() + 1)))) ++pre_bad;
    }
  }
  // (b) single runs with ell = 2000 and eps = 0.5.
  int trials = 0, hits = 0;
  for (std::uint64_t seed = 0; trials < 60 && seed < 1000; ++seed) {
    const auto it = random_item(seed, 7, 14, 6);
    const Star star = seed % 2 ? Star::fastest : Star::foremost;
    const auto exact = oracle::betweenness_all_bf(it.g, star);
    const double best = std::max_element(exact.begin(), exact.end())->get_d();
    if (best == 0) continue;
    for (std::uint64_t rep = 0; rep < 5 && trials < 60; ++rep) {
      BetweennessOptions options;
      options.counter = kVimw;
      options.ell = 2000;
      options.runs = 1;
      options.seed = seed * 1000 + rep;
      const auto est = estimate_max_betweenness(it.g, star, 0.5, 0.1, options);
      ++trials;
      hits += std::abs(est.value.get_d() - best) <= 0.5 * best;
    }
  }
  r.line(8, zero_bad == 0 && pre_bad == 0 && trials == 60 && hits >= 40,
         fmt("(a) %d zero-check mismatches over 100 instances; (b) %d/%d single runs within eps; (c) %d "
             "precondition violations",
             zero_bad, hits, trials, pre_bad));
}

double best_time(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

void criterion9(Report& r) {
  const auto path = gen::temporal_path(100000, 1000, 1);
  const double forest_secs = best_time([&] { count_forest(path, 0, 99999); }, 1);
  const auto strip = gen::triangle_strip(50000, 1);
  const double big_secs = best_time([&] { count_vimw(strip, 0, 100000); }, 1);
  const bool width_ok = vim_width(strip) == 3 && strip.lifetime() == 100000;
  double t[3];
  const std::size_t lengths[3] = {5000, 10000, 20000};
  for (int i = 0; i < 3; ++i) {
    const auto g = gen::triangle_strip(lengths[i], 2);
    t[i] = best_time([&] { count_vimw(g, 0, static_cast<Vertex>(2 * lengths[i])); }, 7);
  }
  const bool linear = t[1] <= 2 * 1.2 * t[0] && t[2] <= 4 * 1.2 * t[0];
  r.line(9, forest_secs < 10 && big_secs < 30 && width_ok && linear,
         fmt("forest n=1e5 T=1e3 %.3f s; vimw width 3 T=1e5 %.3f s; T=1e4/2e4/4e4 %.4f/%.4f/%.4f s (x%.2f, x%.2f)",
             forest_secs, big_secs, t[0], t[1], t[2], t[1] / t[0], t[2] / t[0]));
}

std::string run_cli_capture(std::vector<std::string> args, const std::string& input, int* code) {
  args.insert(args.begin(), "chronos");
  std::istringstream in(input);
  std::ostringstream out, err;
  *code = run_cli(args, in, out, err);
  return out.str();
}

void criterion10(Report& r) {
  const auto text = serialize_edge_list(gen::random_graph(8, 20, 5, 44));
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "random", "--n", "9", "--m", "20", "--T", "6", "--seed", "12"},
      {"gen", "forest", "--n", "15", "--seed", "12"},
      {"gen", "path", "--n", "200", "--T", "20", "--seed", "12"},
      {"gen", "strip", "--l", "30", "--seed", "12"},
      {"sample", "-s", "0", "-z", "1", "--count", "50", "--seed", "12"},
      {"sample", "-s", "0", "-z", "1", "--count", "50", "--seed", "12", "--optimal", "foremost"},
      {"sample", "-s", "0", "-z", "1", "--count", "50", "--seed", "12", "--optimal", "fastest"},
      {"count", "-s", "0", "-z", "1", "--approx", "--epsilon", "0.5", "--delta", "0.2", "--k-max", "4", "--seed", "12"},
      {"count", "-s", "0", "-z", "1", "--approx", "--epsilon", "0.5", "--k", "3", "--seed", "12", "--format", "json"},
      {"betweenness-approx", "--ell", "100", "--epsilon", "0.5", "--seed", "12"},
      {"betweenness-approx", "--ell", "100", "--epsilon", "0.5", "--seed", "12", "--star", "fastest", "--format",
       "json"},
  };
  int differing = 0, errors = 0;
  for (const auto& c : commands) {
    int a_code = 0, b_code = 0, t_code = 0;
    const auto a = run_cli_capture(c, text, &a_code);
    const auto b = run_cli_capture(c, text, &b_code);
    std::vector<std::string> threaded = c;
    if (c[0] != "gen") {
      threaded.push_back("--threads");
      threaded.push_back("3");
    }
    const auto t = run_cli_capture(threaded, text, &t_code);
    errors += a_code != 0 || b_code != 0 || t_code != 0 || a.empty();
    differing += a != b || a != t;
  }
  r.line(10, differing == 0 && errors == 0,
         fmt("%zu randomized commands run twice and with 3 threads, %d differ, %d failed", commands.size(),
             differing, errors));
}

}  // namespace

int main() {
  Report report;
  const auto items = corpus();
  criterion1(report, items);
  criterion2(report);
  criterion3(report, items);
  criterion4(report, items);
  criterion5(report);
  criterion6(report);
  criterion7(report);
  criterion8(report);
  criterion9(report);
  criterion10(report);
  std::printf("%d of 10 criteria failed\n", report.failures);
  return report.failures == 0 ? 0 : 1;
}
