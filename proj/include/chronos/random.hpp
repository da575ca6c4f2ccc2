#pragma once

#include <cstdint>
#include <limits>

#include "chronos/bigcount.hpp"

namespace chronos {

// SplitMix64 (Steele, Lea, Flood 2014). Every randomized routine takes a
// single 64-bit seed; independent streams are derived with split(), so the
// output of a run depends only on the seed and never on thread scheduling.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Stream for child `index`; the parent state is not advanced.
  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 mixer(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    return SplitMix64(mixer());
  }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform big integer in [0, bound); bound must be positive.
  BigCount below(const BigCount& bound);

 private:
  std::uint64_t state_;
};

}  // namespace chronos
