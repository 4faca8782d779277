#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/intgeom/invariants.hpp"

namespace sailkit {

// Simplicial rational cone spanned by n integer vectors in Z^n, n in {2, 3}.
// Generators are replaced by their primitive multiples.
struct ConeSpec {
  std::vector<IntPoint> generators;
};

void validate_cone(ConeSpec& cone);

// Nonzero integer points of the closed cone with max-norm <= bound.
std::vector<IntPoint> lattice_points_in_cone(const ConeSpec& cone, std::int64_t bound);

// Congruence class of a lattice polygon, segment or point together with its
// integer distance to the origin.
struct FaceType {
  IntMatrix form;
  BigInt distance;
  friend bool operator==(const FaceType& a, const FaceType& b) {
    return a.distance == b.distance && a.form == b.form;
  }
  friend bool operator<(const FaceType& a, const FaceType& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.form < b.form;
  }
};

// Canonical encoding under affine lattice maps of the face's own plane:
// vertices (in boundary order) are written in a lattice basis of the plane,
// translated to each starting vertex in both directions, reduced by row HNF,
// and the least matrix is kept. Throws non-planar for 3D input not lying in
// a plane.
IntMatrix face_normal_form(const std::vector<IntPoint>& face);
FaceType face_type(const std::vector<IntPoint>& face, const BigInt& origin_distance);

struct SailFace {
  std::vector<std::size_t> vertices;  // into Sail::vertices, boundary order
  int dim = 0;                        // 1 for edges of 2D sails, 2 for polygons
  IntPoint normal;                    // primitive, n.x >= distance on the cone's lattice points
  BigInt distance;                    // integer distance to the origin
  BigInt length;                      // integer length (edges)
  BigInt area;                        // integer area, unit triangle = 1 (polygons)
  IntMatrix normal_form;
};

struct Sail {
  int dim = 0;
  std::vector<IntPoint> vertices;
  std::vector<SailFace> faces;
  std::vector<IntPoint> lattice_points;  // 2D: all lattice points of the broken line, in order
  std::int64_t window = 0;
  bool complete = false;
};

// Boundary of the convex hull of the nonzero lattice points of the cone,
// without the parts lying in the cone's boundary (every remaining face is
// compact). Computed exactly from the
// lattice points of the half-open fundamental parallelepiped; `window` is
// the max-norm of that region and a smaller requested window throws
// window-too-small.
Sail klein_sail(ConeSpec cone, std::int64_t window = 0);

// Faces with their vertices listed as points, convenient for comparisons.
std::vector<std::vector<IntPoint>> face_point_lists(const Sail& sail);

// OFF mesh of the faces (2D sails embed in z = 0 with edges as faces).
std::string to_off(const Sail& sail);

// Fills distance, length/area and normal form of a face from its points.
void annotate_face(SailFace& face, const std::vector<IntPoint>& vertices);

}  // namespace sailkit
