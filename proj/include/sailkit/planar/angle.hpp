#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sailkit/contfrac/contfrac.hpp"
#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/real_algebraic.hpp"
#include "sailkit/intgeom/invariants.hpp"

namespace sailkit {

// Ray leaving the vertex in direction sign * (1, slope).
struct SlopeRay {
  RealAlgebraic slope;
  int sign = 1;
};

// Either an integer point on the ray (absolute coordinates) or a slope.
using RayDir = std::variant<IntPoint, SlopeRay>;

struct IntAngle {
  IntPoint vertex{0, 0};
  RayDir ray1;
  RayDir ray2;
};

// Lattice length-sine sequence: a0, a1, ... with an optional period.
// `truncated` marks a prefix of an infinite non-periodic sequence.
struct LLSSequence {
  std::vector<BigInt> head;
  std::vector<BigInt> period;
  bool truncated = false;

  bool finite() const { return period.empty() && !truncated; }
  std::string to_string() const;  // "(1,2,2)", "((1))", "(1,3,1,...)"
  friend bool operator==(const LLSSequence&, const LLSSequence&) = default;
};

LLSSequence reversed(const LLSSequence& s);  // finite sequences only

struct BrokenLine {
  std::vector<IntPoint> vertices;
  std::vector<IntPoint> lattice_points;  // every lattice point on the line, in order
  bool complete = true;                   // false when cut at the window
};

constexpr std::int64_t kDefaultAngleWindow = 1000;

// Boundary of the convex hull of the lattice points of the angle minus the
// vertex, without its two infinite edges. Irrational rays are followed while
// the vertices stay within max-norm `window` of the vertex.
BrokenLine angle_sail(const IntAngle& angle, std::int64_t window = kDefaultAngleWindow);

// Lengths of the sail edges alternating with sines at its vertices. Cubic
// slopes give a prefix covering the sail inside the window.
LLSSequence lls(const IntAngle& angle, std::int64_t window = kDefaultAngleWindow);

// The same quantities read directly off a finite broken line.
LLSSequence lls_of_broken_line(const std::vector<IntPoint>& vertices);

// Integer tangent [a0; a1, a2, ...].
RealAlgebraic itan(const IntAngle& angle);
// Throws infinite-sine for angles with an irrational ray.
BigInt isin(const IntAngle& angle);
BigRat icos(const IntAngle& angle);

// Model angle between (1,0) and the ray through (q, p), p/q the value of the
// sequence; periodic sequences give a slope ray.
IntAngle angle_from_lls(const LLSSequence& seq);

enum class IkeaStatus { found, not_found_within_budget };

struct IkeaResult {
  IkeaStatus status;
  std::vector<IntPoint> witness;  // triangle vertices A, B, C when found
  std::int64_t budget;
  std::size_t triangles_checked = 0;
};

constexpr std::int64_t kDefaultIkeaBudget = 20;

// Searches triangles A = (0,0), B = (l,0), C = (x,y) with 0 <= x < y and
// l, y <= budget (every triangle is congruent to one of these) for one
// whose angles carry the given sequences in some order and orientation.
IkeaResult ikea_check_triangle(const std::vector<LLSSequence>& seqs, std::int64_t budget = kDefaultIkeaBudget);

}  // namespace sailkit
