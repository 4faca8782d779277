#pragma once

#include <cstdint>
#include <vector>

#include "sailkit/exact/number_field.hpp"
#include "sailkit/intgeom/invariants.hpp"
#include "sailkit/klein/klein.hpp"

namespace sailkit {

// Linear form with coefficients in one real number field.
struct LinearForm {
  std::vector<FieldElem> coeffs;
  std::vector<double> approx;

  explicit LinearForm(std::vector<FieldElem> c);
  LinearForm() = default;
  FieldElem value(const IntPoint& x) const;
  int sign(const IntPoint& x) const;  // exact, double filter first
};

// Simplicial cone {x : f_i(x) > 0 for all i} in R^n, n in {2, 3}. Ray j is
// annihilated by every form except f_j and has f_j(ray_j) > 0.
struct FormCone {
  std::vector<LinearForm> forms;
  std::vector<std::vector<FieldElem>> rays;
  std::size_t dim() const { return forms.size(); }
  bool contains(const IntPoint& x) const;  // open cone
};

// Exact sign of n . ray_j.
int normal_ray_sign(const FormCone& cone, const IntPoint& n, std::size_t j);

// Lattice points of the open cone with max-norm <= window.
std::vector<IntPoint> cone_points(const FormCone& cone, std::int64_t window);

// Sail of the open cone, certified inside a window: a hull facet of the
// window points is kept when its normal lies in the dual cone and the part
// of the cone cut off by its plane lies inside the window, which makes it a
// face of the full hull. In 2D a facet parallel to a rational ray at
// distance 1 contributes its lower endpoint as a vertex. Vertices of 2D
// sails are listed from ray 0 towards ray 1.
Sail window_sail(const FormCone& cone, std::int64_t window);

}  // namespace sailkit
