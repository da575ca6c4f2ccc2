#include "chronos/random.hpp"

#include <vector>

namespace chronos {

BigCount SplitMix64::below(const BigCount& bound) {
  if (bound.fits_ulong_p()) return big(below(static_cast<std::uint64_t>(bound.get_ui())));
  // Draw as many 64-bit words as the bound needs, masking the top word, and
  // reject values outside the range.
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
  std::vector<std::uint64_t> buf(words);
  BigCount r;
  do {
    for (auto& w : buf) w = (*this)();
    buf[0] &= top_mask;
    mpz_import(r.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
  } while (r >= bound);
  return r;
}

}  // namespace chronos
