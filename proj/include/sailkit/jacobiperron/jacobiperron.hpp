#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sailkit/exact/number_field.hpp"

namespace sailkit {

// State (alpha, beta) of the Jacobi-Perron map on (1, alpha, beta):
// digits (a, b) = (floor alpha, floor beta), next state
// ((beta - b) / (alpha - a), 1 / (alpha - a)).
struct JPState {
  FieldElem alpha, beta;
  std::size_t step = 0;
};

enum class JPVerdict { terminated, periodic, inconclusive };
std::string to_string(JPVerdict v);

struct JPExpansion {
  std::vector<std::pair<BigInt, BigInt>> digits;
  JPVerdict verdict = JPVerdict::inconclusive;
  std::size_t preperiod = 0;  // periodic: digits[preperiod, preperiod + period) repeat
  std::size_t period = 0;
  // terminated: the state at which alpha became an integer. beta is
  // rational for rational data and may be irrational for dependent triples.
  FieldElem terminal_alpha, terminal_beta;
  bool independent = false;  // 1, y, z linearly independent over Q
  FieldElem y, z;
};

constexpr std::size_t kDefaultJPSteps = 200;

JPExpansion jp_expand(const FieldElem& y, const FieldElem& z, std::size_t max_steps = kDefaultJPSteps);
// Puts y and z in a common field first; throws incompatible-fields.
JPExpansion jp_expand(const RealAlgebraic& y, const RealAlgebraic& z, std::size_t max_steps = kDefaultJPSteps);

// Approximation of (y, z) from the first k digits: the last column of the
// product of the digit matrices [[0,0,1],[1,0,a],[0,1,b]], k = 0 giving
// (0, 0). For a terminated expansion, k = digits.size() uses the terminal
// state and is exact (throws irrational-terminal-state if beta is
// irrational there). Periodic expansions supply digits past the stored
// list by repeating the period.
std::pair<BigRat, BigRat> jp_reconstruct(const JPExpansion& e, std::size_t k);

// Certified upper bound on max(|y - y_k|, |z - z_k|) for the pair (y_k, z_k).
BigRat jp_error_bound(const JPExpansion& e, const std::pair<BigRat, BigRat>& approx);

}  // namespace sailkit
