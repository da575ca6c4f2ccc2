#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chronos {

// Path counts grow exponentially in the number of vertices (a chain of
// l diamonds already has 2^l paths), so every counter works on GMP integers.
using BigCount = mpz_class;

// Exact rational, used for betweenness values and estimator outputs.
using ExactRatio = mpq_class;

inline BigCount big(std::uint64_t v) {
  BigCount r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_string(const BigCount& v) { return v.get_str(); }

inline std::string to_string(const ExactRatio& v) {
  ExactRatio c(v);
  c.canonicalize();
  return c.get_str();
}

inline double to_double(const ExactRatio& v) { return v.get_d(); }

}  // namespace chronos
