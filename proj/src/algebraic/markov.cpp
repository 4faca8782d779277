#include <algorithm>
#include <cmath>

#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/error.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

namespace {

// Preferred witness: smaller |x| + |y|, then the lexicographically larger point.
bool better_witness(const IntPoint& a, const IntPoint& b) {
  std::int64_t na = std::abs(a[0]) + std::abs(a[1]), nb = std::abs(b[0]) + std::abs(b[1]);
  if (na != nb) return na < nb;
  return a > b;
}

struct Best {
  bool found = false;
  FieldElem value;
  IntPoint witness;
  void offer(const FieldElem& v, const IntPoint& p) {
    int c = found ? compare(v, value) : -1;
    if (c < 0 || (c == 0 && better_witness(p, witness))) {
      found = true;
      value = v;
      witness = p;
    }
  }
};

}  // namespace

MarkovResult markov_minimum_2d(const PlanarForm& l1, const PlanarForm& l2, std::int64_t bound) {
  if (bound < 1) fail("bad-bound", "bound must be positive");
  // All four coefficients in one field.
  std::vector<RealAlgebraic> raw{l1.a, l1.b, l2.a, l2.b};
  RealAlgebraic gen(0);
  for (const auto& r : raw)
    if (!r.is_rational()) {
      gen = r;
      break;
    }
  FieldPtr field = NumberField::make(gen);
  std::vector<FieldElem> c;
  for (const auto& r : raw) {
    auto e = express_in(field, r);
    if (!e) fail("incompatible-fields", r.to_string() + " is not in the field of " + gen.to_string());
    c.push_back(*e);
  }
  FieldElem d = c[0] * c[3] - c[1] * c[2];
  if (d.is_zero()) fail("degenerate-forms", "the two forms are proportional");

  LinearForm f1({c[0], c[1]}), f2({c[2], c[3]});
  auto product = [&](const IntPoint& p) {
    FieldElem v = f1.value(p) * f2.value(p);
    return v.sign() < 0 ? -v : v;
  };
  double a1 = f1.approx[0], b1 = f1.approx[1], a2 = f2.approx[0], b2 = f2.approx[1];

  // Brute force: double values first, exact comparison near the minimum.
  std::size_t side = static_cast<std::size_t>(2 * bound + 1);
  auto cols = parallel_map<std::vector<std::pair<double, IntPoint>>>(side, [&](std::size_t ix) {
    std::vector<std::pair<double, IntPoint>> out;
    std::int64_t x = static_cast<std::int64_t>(ix) - bound;
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      double v = std::abs((a1 * x + b1 * y) * (a2 * x + b2 * y));
      out.push_back({v, {x, y}});
    }
    return out;
  });
  std::vector<std::pair<double, IntPoint>> all;
  for (auto& col : cols) all.insert(all.end(), col.begin(), col.end());
  Best brute;
  double mag = (std::abs(a1) + std::abs(b1)) * (std::abs(a2) + std::abs(b2)) * static_cast<double>(bound * bound);
  double zero_tol = 1e-9 * mag;
  double floor_v = HUGE_VAL;
  for (const auto& [v, p] : all) {
    if (v <= zero_tol) {
      if (product(p).is_zero()) continue;
    }
    floor_v = std::min(floor_v, v);
  }
  if (floor_v == HUGE_VAL) fail("degenerate-forms", "every point in the box is a zero of the product");
  for (const auto& [v, p] : all)
    if (v <= floor_v * (1 + 1e-6) + zero_tol) {
      FieldElem e = product(p);
      if (!e.is_zero()) brute.offer(e, p);
    }

  // Sail vertices of the four open cones {s1 L1 > 0, s2 L2 > 0}.
  Best sail_best;
  std::size_t nverts = 0;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      FormCone cone;
      FieldElem m1(field, BigRat(s1)), m2(field, BigRat(s2));
      cone.forms.emplace_back(std::vector<FieldElem>{m1 * c[0], m1 * c[1]});
      cone.forms.emplace_back(std::vector<FieldElem>{m2 * c[2], m2 * c[3]});
      // Ray 0 lies on L2 = 0, ray 1 on L1 = 0.
      std::vector<FieldElem> r0{c[3], -c[2]}, r1{c[1], -c[0]};
      if ((m1 * d).sign() < 0) r0 = {-r0[0], -r0[1]};
      if ((-(m2 * d)).sign() < 0) r1 = {-r1[0], -r1[1]};
      cone.rays = {r0, r1};
      Sail s = window_sail(cone, bound);
      nverts += s.vertices.size();
      for (const auto& v : s.vertices) sail_best.offer(product(v), v);
    }
  if (!sail_best.found || compare(sail_best.value, brute.value) != 0)
    fail("inconsistent-minima",
         "brute force gives " + brute.value.to_real().to_string() + " but the sail vertices give " +
             (sail_best.found ? sail_best.value.to_real().to_string() : std::string("nothing")),
         ErrorKind::internal);
  MarkovResult r;
  r.value = sail_best.value.to_real();
  r.witness = sail_best.witness;
  r.brute_value = brute.value.to_real();
  r.brute_witness = brute.witness;
  r.sail_vertices = nverts;
  return r;
}

}  // namespace sailkit
