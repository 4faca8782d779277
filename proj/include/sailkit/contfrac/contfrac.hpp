#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sailkit/exact/rational.hpp"
#include "sailkit/exact/real_algebraic.hpp"

namespace sailkit {

// [a0; a1, a2, ...] with an optional primitive period repeated forever.
struct ContinuedFraction {
  std::vector<BigInt> head;
  std::vector<BigInt> period;

  bool periodic() const { return !period.empty(); }
  std::size_t length() const { return head.size(); }  // finite part
  // i-th partial quotient, unrolling the period.
  const BigInt& at(std::size_t i) const;
  // "[1;2,2]", "[1;(2)]", "[(1)]"
  std::string to_string() const;
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

// Throws bad-continued-fraction unless a_i >= 1 for i >= 1 and the
// period (if any) is nonempty and positive.
void validate(const ContinuedFraction& cf);

enum class Parity { any, odd, even };

// Euclidean expansion; odd/even force the length parity by the rewrite
// [..., a] <-> [..., a - 1, 1].
ContinuedFraction expand(const BigRat& r, Parity parity = Parity::any);

BigRat evaluate_finite(const ContinuedFraction& cf);
// Rationals for finite expansions, the quadratic fixed point otherwise.
RealAlgebraic evaluate(const ContinuedFraction& cf);

// Exact Gauss map on (P + sqrt(D)) / Q states; head plus primitive period.
ContinuedFraction expand_quadratic(const RealAlgebraic& a);

// First n partial quotients of any real algebraic number (fewer if the
// expansion terminates).
std::vector<BigInt> expand_prefix(const RealAlgebraic& a, std::size_t n);

// (p_i, q_i) for i < k, from the three-term recurrence.
std::vector<std::pair<BigInt, BigInt>> convergent_pairs(const ContinuedFraction& cf, std::size_t k);
std::vector<BigRat> convergents(const ContinuedFraction& cf, std::size_t k);

}  // namespace sailkit
