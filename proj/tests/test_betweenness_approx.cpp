#include <gtest/gtest.h>

#include "chronos/betweenness_approx.hpp"
#include "chronos/error.hpp"
#include "chronos/oracle.hpp"
#include "support.hpp"

using namespace chronos;
using namespace chronos::testing;

TEST(ZeroCheck, Examples) {
  EXPECT_TRUE(zero_check(I4(), Star::foremost));
  EXPECT_TRUE(zero_check(I4(), Star::fastest));
  EXPECT_FALSE(zero_check(I1(), Star::foremost));
  EXPECT_TRUE(zero_check(TemporalGraph(4, {}), Star::fastest));
  // The path through 1 is foremost for (0,2), but the direct edge is faster.
  EXPECT_FALSE(zero_check(I5(), Star::foremost));
  EXPECT_TRUE(zero_check(I5(), Star::fastest));
}

TEST(ZeroCheck, MatchesDefinition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto item = random_item(seed, 7, 14, 6);
    for (Star star : {Star::foremost, Star::fastest}) {
      EXPECT_EQ(zero_check(item.g, star), !oracle::has_internal_optimal_path_bf(item.g, star)) << "seed " << seed;
    }
  }
}

TEST(BetweennessApprox, Parameters) {
  EXPECT_EQ(amplification_runs(0.1), 8u);
  EXPECT_EQ(amplification_runs(0.5), 3u);
  EXPECT_THROW(amplification_runs(0.0), Error);
  EXPECT_THROW(betweenness_sample_formula(5, 3, 1.5), Error);
  EXPECT_GT(betweenness_sample_formula(5, 3, 0.5), 1'000'000u);
}

TEST(BetweennessApprox, ZeroInstances) {
  const auto est = estimate_max_betweenness(I4(), Star::fastest, 0.5, 0.1);
  EXPECT_EQ(est.value, 0);
}

TEST(BetweennessApprox, SingleRelayVertex) {
  BetweennessOptions options;
  options.ell = 200;
  const auto est = estimate_max_betweenness(I1(), Star::foremost, 0.25, 0.1, options);
  EXPECT_EQ(est.value, 1);
  EXPECT_EQ(est.argmax, 1u);
  EXPECT_EQ(est.ell, 200u);
  EXPECT_EQ(est.trials, 8u);
}

TEST(BetweennessApprox, CapAppliesToFormula) {
  BetweennessOptions options;
  options.ell_cap = 50;
  options.runs = 1;
  EXPECT_EQ(estimate_max_betweenness(I1(), Star::foremost, 0.5, 0.1, options).ell, 50u);
}

TEST(BetweennessApprox, Deterministic) {
  auto item = random_item(3, 7, 14, 5);
  BetweennessOptions options;
  options.ell = 100;
  options.runs = 3;
  options.seed = 5;
  const auto a = estimate_max_betweenness(item.g, Star::foremost, 0.5, 0.1, options);
  options.threads = 3;
  const auto b = estimate_max_betweenness(item.g, Star::foremost, 0.5, 0.1, options);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argmax, b.argmax);
}

TEST(BetweennessApprox, CloseToExactMaximum) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40 && checked < 8; ++seed) {
    auto item = random_item(seed, 7, 14, 5);
    for (Star star : {Star::foremost, Star::fastest}) {
      const auto exact = oracle::betweenness_all_bf(item.g, star);
      const auto best = *std::max_element(exact.begin(), exact.end());
      if (best == 0) continue;
      ++checked;
      BetweennessOptions options;
      options.ell = 2000;
      options.runs = 3;
      options.seed = seed;
      const auto est = estimate_max_betweenness(item.g, star, 0.5, 0.1, options);
      EXPECT_LE(std::abs(est.value.get_d() - best.get_d()), 0.5 * best.get_d()) << "seed " << seed;
      EXPECT_GE(exact[est.argmax].get_d(), 0.5 * best.get_d());
    }
  }
  EXPECT_GE(checked, 8);
}

// A non-zero maximum is at least 1 / (n (T + 1)).
TEST(BetweennessApprox, NonZeroMaximumIsNotTiny) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto item = random_item(seed, 8, 16, 6);
    for (Star star : {Star::foremost, Star::fastest}) {
      const auto exact = oracle::betweenness_all_bf(item.g, star);
      const auto best = *std::max_element(exact.begin(), exact.end());
      if (best == 0) continue;
      EXPECT_GE(best, ExactRatio(big(1), big(item.g.vertex_count() * (item.g.lifetime() + 1))));
    }
  }
}
