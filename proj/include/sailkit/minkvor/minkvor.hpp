#pragma once

#include <cstdint>
#include <vector>

#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/intgeom/invariants.hpp"

namespace sailkit {

// |Γ| within a window: coordinate-wise absolute values of the nonzero
// points of the lattice spanned by `basis` with max-norm <= window.
struct SymLatticeWindow {
  std::vector<IntPoint> basis;
  std::int64_t window = 0;
  std::vector<IntPoint> points;  // sorted, distinct
};

// Throws bad-basis for dependent or ill-sized input (n in {2, 3}).
SymLatticeWindow make_sym_lattice(const std::vector<IntPoint>& basis, std::int64_t window);

// Points of |Γ| not dominated coordinate-wise by another point of |Γ|. A
// dominating point never lies outside the window, so the list is exact for
// the window. Throws window-too-small when some axis carries no point.
std::vector<IntPoint> local_minima(const SymLatticeWindow& lat);

// Piece of the staircase lying in the hyperplane x[axis] = minimum[axis].
struct StaircaseFacet {
  std::size_t minimum;
  int axis;
  std::vector<std::size_t> nodes;
};

// Boundary of the free region {x >= 0 : no q in |Γ| has q < x in every
// coordinate}. Minima are sorted lexicographically; nodes are the outer
// corners, each the coordinate-wise join of the minima supporting it.
struct Staircase {
  std::vector<IntPoint> minima;
  std::vector<IntPoint> nodes;
  std::vector<StaircaseFacet> facets;
};

Staircase mv_sail(const SymLatticeWindow& lat);

enum class StairSide { under, on, above };

// Position of a point (rational coordinates) relative to the staircase.
StairSide classify(const Staircase& s, const std::vector<BigRat>& x);

// Direct test: no point of |Γ| lies in the box [0, x).
bool box_is_empty(const SymLatticeWindow& lat, const std::vector<BigRat>& x);

}  // namespace sailkit
