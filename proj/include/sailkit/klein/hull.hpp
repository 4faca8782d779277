#pragma once

#include <cstdint>
#include <vector>

#include "sailkit/intgeom/invariants.hpp"

namespace sailkit {

using i128 = __int128;

// Coordinates must stay below this bound so orientation determinants fit
// in 128 bits with room to spare.
constexpr std::int64_t kHullCoordLimit = std::int64_t(1) << 24;

// Facet of a convex hull: inner primitive normal n with n.x >= offset on the
// hull, equality on the facet. Vertices index into the input and are the
// extreme points of the facet in cyclic order (counter-clockwise seen from
// outside in 3D, increasing along the boundary in 2D).
struct HullFacet {
  IntPoint normal;
  i128 offset = 0;
  std::vector<std::size_t> vertices;
};

// Exact convex hull of points in Z^2 or Z^3 with full-dimensional span.
// Throws degenerate-point-set otherwise; coordinates beyond the limit throw
// coordinate-overflow.
std::vector<HullFacet> convex_hull(const std::vector<IntPoint>& points);

// Indices of the extreme points of the hull, sorted.
std::vector<std::size_t> hull_vertices(const std::vector<HullFacet>& facets);

i128 dot128(const IntPoint& a, const IntPoint& b);

}  // namespace sailkit
