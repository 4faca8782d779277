#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sailkit/algebraic/form_cone.hpp"
#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/real_algebraic.hpp"
#include "sailkit/klein/klein.hpp"

namespace sailkit {

// One cone of the arrangement of invariant hyperplanes of a unimodular
// matrix with totally real irreducible characteristic polynomial.
struct AlgebraicCone {
  IntMatrix matrix;
  Poly charpoly;
  std::vector<RealAlgebraic> eigenvalues;  // ascending
  // Row i is a left eigenvector for eigenvalue i (kernel = invariant plane),
  // with coefficients in Q(eigenvalue i).
  std::vector<LinearForm> eigen_forms;
  // Column j of the adjugate of A - theta_j I: right eigenvectors.
  std::vector<std::vector<FieldElem>> eigen_vectors;
  std::vector<int> orthant_signs;  // cone = {x : s_i f_i(x) > 0}

  FormCone form_cone() const;
};

Poly characteristic_polynomial(const IntMatrix& a);

// Checks |det| = 1, irreducibility and real roots, then returns the 2^n
// cones (sign vectors in lexicographic order, -1 before +1).
std::vector<AlgebraicCone> validate_matrix(const IntMatrix& a);

// The cone with every sign +1.
AlgebraicCone positive_cone(const IntMatrix& a);

struct DirichletGroup {
  IntMatrix base;
  std::vector<IntMatrix> generators;
  std::vector<std::vector<BigInt>> coefficients;  // (x, y, z): xI + yA + zA^2
  std::size_t rank = 0;
  std::int64_t box = 0;
  std::size_t units_found = 0;
  bool independence_certified = false;
  std::vector<int> certified_bits;  // precisions at which independence held
};

constexpr std::int64_t kDirichletBox = 50;

// Unimodular elements xI + yA (+ zA^2) with positive eigenvalues in the
// coefficient box; returns n - 1 independent generators of the lattice they
// span, reduced to short logarithm vectors. Throws
// generators-not-found-in-box or, for a persistent near-dependence,
// inconclusive.
DirichletGroup dirichlet_group(const IntMatrix& a, std::int64_t box = kDirichletBox);

// Eigenvalues of M (a polynomial in A) at each root, as field elements.
std::vector<FieldElem> unit_eigenvalues(const AlgebraicCone& cone, const IntMatrix& m);

constexpr std::int64_t kDefaultAlgebraicWindow2d = 60;
constexpr std::int64_t kDefaultAlgebraicWindow3d = 60;

// Certified part of the Klein sail of the cone inside a max-norm window.
Sail algebraic_sail(const AlgebraicCone& cone, std::int64_t window = 0);

// Cone of the same arrangement containing M applied to `cone` (M commutes
// with A).
AlgebraicCone image_cone(const AlgebraicCone& cone, const IntMatrix& m);

struct InvarianceReport {
  std::size_t faces_checked = 0;   // image faces whose cut-off part fits the doubled window
  std::size_t faces_skipped = 0;
  std::size_t vertices_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && faces_checked > 0; }
};

// For every certified face F at `window` and every M among A, the
// generators and their inverses: when M(F) is cut off inside twice the
// window, M(F) must be a certified face of the image cone's sail there.
InvarianceReport check_invariance(const AlgebraicCone& cone, const DirichletGroup& g, std::int64_t window);

struct FaceClass {
  FaceType type;                       // normal form and integer distance
  std::vector<IntPoint> representative;  // lexicographically least member found
  std::size_t vertex_count = 0;
};

struct TypeCount {
  FaceType type;
  std::size_t vertex_count = 0;
  std::size_t multiplicity = 0;
};

struct TorusDecomposition {
  int dim = 0;  // ambient dimension
  std::vector<FaceClass> face_classes;  // one per orbit of top-dimensional sail faces
  std::vector<FaceClass> edge_classes;  // 3D: one per orbit of edges
  std::vector<TypeCount> type_counts;   // face orbits grouped by congruence type and distance
  std::size_t vertices = 0, edges = 0, faces = 0;
  long euler() const { return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces); }
};

// Orbits of the certified faces under the group. Throws
// incomplete-orbit-coverage when some orbit has no member whose vertex stars
// are all certified.
TorusDecomposition fundamental_domain(const AlgebraicCone& cone, const Sail& sail, const DirichletGroup& g);

struct ArnoldReport {
  bool applicable = false;  // conjecture concerns 2D sails of 3D cones
  bool has_triangle = false;
  bool has_distance_one = false;
  bool has_distance_gt_one = false;
  std::size_t triangles = 0, quadrangles = 0, other_polygons = 0;
  bool only_quadrangles = false;
  std::string note;
};

// One period of the LLS sequence of a planar algebraic sail: sines and
// lengths from a certified vertex v up to g(v), starting with the sine at v.
std::vector<BigInt> sail_lls_period(const AlgebraicCone& cone, const Sail& sail, const IntMatrix& g);

ArnoldReport arnold_probe(const TorusDecomposition& td);

// Totally real cubic examples shipped with the tool.
std::vector<std::pair<std::string, IntMatrix>> shipped_cubics();

// Linear form a x + b y with real algebraic coefficients.
struct PlanarForm {
  RealAlgebraic a, b;
};

struct MarkovResult {
  RealAlgebraic value;
  IntPoint witness;
  RealAlgebraic brute_value;
  IntPoint brute_witness;
  std::size_t sail_vertices = 0;
};

// Minimum of |L1 L2| over integer points with L1 L2 != 0, computed by brute
// force over max-norm <= bound and over the sail vertices of the four open
// cones of the arrangement; throws inconsistent-minima if they disagree.
MarkovResult markov_minimum_2d(const PlanarForm& l1, const PlanarForm& l2, std::int64_t bound);

}  // namespace sailkit
