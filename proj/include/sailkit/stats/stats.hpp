#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/rational.hpp"

namespace sailkit {

// (k+1)^2 / (k (k+2)), the argument of the logarithm in the Gauss-Kuzmin law.
BigRat gk_ratio(long k);

// log2(1 + 1/(k(k+2))), computed with MPFR and rounded to double.
double gk_probability(long k);
// The same value as a decimal string with `digits` significant digits.
std::string gk_probability_decimal(long k, int digits = 30);

// Point of the projective line over Q.
struct ExtRat {
  BigRat value;
  bool infinite = false;
  static ExtRat inf() { return {BigRat(0), true}; }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::string to_string() const;
};

ExtRat parse_ext_rat(const std::string& text);  // "3/4", "-2", "inf"

// ((c-a)(d-b)) / ((c-b)(d-a)), with infinite points handled as limits.
// Throws undefined-cross-ratio unless at least three points are distinct.
ExtRat cross_ratio(const ExtRat& a, const ExtRat& b, const ExtRat& c, const ExtRat& d);

struct TelescopingResult {
  double partial_sum;   // sum_{k<=K} ln((k+1)^2/(k(k+2))), compensated summation
  double residual;      // |partial_sum - ln 2|
  double closed_form;   // ln((K+2)/(K+1))
};

TelescopingResult telescoping_check(long K);

constexpr long kDigitBuckets = 64;  // digits above this go to the overflow bucket
constexpr long kEmpiricalCap = 10000;

struct DigitHistogram {
  std::vector<std::uint64_t> counts;  // counts[k] for 1 <= k <= kDigitBuckets; counts[0] unused
  std::uint64_t overflow = 0;
  std::uint64_t total = 0;
  std::string source;
  double frequency(long k) const;
};

// Partial quotients a_1, a_2, ... of every reduced p/q, 1 <= p < q <= q_max,
// in the canonical finite expansion. Throws resource-limit above
// kEmpiricalCap.
DigitHistogram empirical_digits(long q_max);

struct CensusEntry {
  IntMatrix normal_form;
  std::size_t vertex_count = 0;
  std::uint64_t distance_one = 0;
  std::uint64_t distance_more = 0;
};

struct FaceCensus {
  int dim = 3;
  long gen_bound = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t cones = 0;    // cones whose sail was computed
  std::size_t skipped = 0;  // degenerate or over the size caps
  std::uint64_t faces = 0;
  std::uint64_t faces_distance_one = 0;
  std::vector<CensusEntry> entries;  // sorted by normal form
};

// Klein sails of random simplicial cones with generator entries in
// [-gen_bound, gen_bound]; tallies faces by normal form and distance.
FaceCensus face_census(int dim, long gen_bound, std::size_t samples, std::uint64_t seed);

}  // namespace sailkit
