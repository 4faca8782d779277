#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/rational.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5a11c17ULL);
  return r;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline sailkit::BigRat rational(long num_bound, long den_bound) {
  sailkit::BigRat r(uniform(-num_bound, num_bound), uniform(1, den_bound));
  r.canonicalize();
  return r;
}

// Random element of GL_n(Z) as a product of elementary moves.
inline sailkit::IntMatrix unimodular(std::size_t n, int steps = 8) {
  sailkit::IntMatrix m = sailkit::IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long k = uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    if (uniform(0, 3) == 0)
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
  }
  return m;
}

}  // namespace gen
