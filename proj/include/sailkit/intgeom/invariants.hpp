#pragma once

#include <cstdint>
#include <vector>

#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/rational.hpp"

namespace sailkit {

// Integer point of Z^2 or Z^3.
using IntPoint = std::vector<std::int64_t>;

struct IntSimplex {
  std::vector<IntPoint> vertices;  // k + 1 affinely independent points
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  int ambient() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
};

std::vector<BigInt> to_big(const IntPoint& p);
std::vector<BigInt> diff(const IntPoint& b, const IntPoint& a);  // b - a

// Number of lattice points on [A, B] minus one.
BigInt int_length(const IntPoint& a, const IntPoint& b);
// Index of the lattice spanned by the primitive directions of the two rays
// inside the lattice of the plane they span.
BigInt int_sine(const IntPoint& vertex, const IntPoint& ray1, const IntPoint& ray2);
// Index of <B - A, C - A> in the lattice of the plane ABC.
BigInt int_area(const IntPoint& a, const IntPoint& b, const IntPoint& c);
// Integer distance from P to the affine subspace through the points of L.
BigInt int_distance(const IntPoint& p, const std::vector<IntPoint>& subspace);

// Throws degenerate-simplex unless the vertices are affinely independent
// points of one ambient dimension (2 or 3).
void validate_simplex(const IntSimplex& s);

// All lattice points of the closed simplex, by bounding-box scan.
std::vector<IntPoint> lattice_points(const IntSimplex& s);
bool is_empty(const IntSimplex& s);

// Minimal spread max f(S) - min f(S) over nonzero integer functionals f,
// for a full-dimensional simplex. The search is exhaustive up to the best
// coordinate functional, so the result is exact.
BigInt lattice_width(const IntSimplex& s);

// Edge matrix (rows v_i - v_0) reduced to column HNF, minimised over all
// vertex orderings: equal for two simplices iff they are lattice congruent.
IntMatrix simplex_normal_form(const IntSimplex& s);

struct EmptySimplexClass {
  IntMatrix normal_form;  // rows are the edge vectors from the origin
  BigInt volume;          // |det| of the edge matrix
  BigInt width;
  IntSimplex simplex() const;
};

constexpr int kEmptySimplexCap = 20;

// One representative per congruence class of empty 3-simplices with
// normalised volume <= max_volume, sorted by (volume, normal form).
std::vector<EmptySimplexClass> enumerate_empty_simplices_3d(int max_volume, int cap = kEmptySimplexCap);

}  // namespace sailkit
