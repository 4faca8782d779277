#pragma once

#include <vector>

#include "sailkit/exact/rational.hpp"

namespace sailkit {

// LLL reduction of the rows of an integer basis (exact rational
// Gram-Schmidt). Intended for the handful of small bases used in integer
// relation searches; every swap recomputes the orthogonalisation.
std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> basis,
                                            const BigRat& delta = BigRat(3, 4));

}  // namespace sailkit
