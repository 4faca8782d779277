#include "sailkit/algebraic/form_cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sailkit/error.hpp"
#include "sailkit/klein/hull.hpp"

namespace sailkit {

namespace {

FieldElem dot_exact(const std::vector<FieldElem>& v, const IntPoint& x) {
  FieldElem s(v[0].field(), BigRat(0));
  for (std::size_t k = 0; k < v.size(); ++k)
    if (x[k] != 0) s = s + FieldElem(v[k].field(), BigRat(x[k])) * v[k];
  return s;
}

// Sign of sum a_k x_k with a double filter; `exact` computes the fallback.
template <class F>
int filtered_sign(double v, double mag, F&& exact) {
  double err = 1e-11 * mag + 1e-300;
  if (v > err) return 1;
  if (v < -err) return -1;
  return exact();
}

// Sign of W * nr - c * r, done with doubles when clear.
int cap_sign(const FieldElem& nr, double nr_d, const FieldElem& r, double r_d, const BigRat& w, const BigRat& c) {
  double v = w.get_d() * nr_d - c.get_d() * r_d;
  double mag = std::abs(w.get_d() * nr_d) + std::abs(c.get_d() * r_d);
  return filtered_sign(v, mag, [&] {
    return (FieldElem(nr.field(), w) * nr - FieldElem(r.field(), c) * r).sign();
  });
}

IntPoint sub(const IntPoint& a, const IntPoint& b) {
  IntPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::int64_t max_norm(const IntPoint& p) {
  std::int64_t m = 0;
  for (auto c : p) m = std::max<std::int64_t>(m, std::abs(c));
  return m;
}

}  // namespace

LinearForm::LinearForm(std::vector<FieldElem> c) : coeffs(std::move(c)) {
  for (const auto& a : coeffs) approx.push_back(a.approx());
}

FieldElem LinearForm::value(const IntPoint& x) const { return dot_exact(coeffs, x); }

int LinearForm::sign(const IntPoint& x) const {
  double v = 0, mag = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    v += approx[k] * static_cast<double>(x[k]);
    mag += std::abs(approx[k] * static_cast<double>(x[k]));
  }
  return filtered_sign(v, mag, [&] { return value(x).sign(); });
}

bool FormCone::contains(const IntPoint& x) const {
  if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) return false;
  for (const auto& f : forms)
    if (f.sign(x) <= 0) return false;
  return true;
}

int normal_ray_sign(const FormCone& cone, const IntPoint& n, std::size_t j) {
  const auto& r = cone.rays[j];
  double v = 0, mag = 0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    double t = static_cast<double>(n[k]) * r[k].approx();
    v += t;
    mag += std::abs(t);
  }
  return filtered_sign(v, mag, [&] { return dot_exact(r, n).sign(); });
}

std::vector<IntPoint> cone_points(const FormCone& cone, std::int64_t window) {
  std::size_t n = cone.dim();
  std::vector<IntPoint> out;
  IntPoint x(n, -window);
  for (;;) {
    if (cone.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i-- > 0) {
      if (++x[i] <= window) break;
      x[i] = -window;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

namespace {

// Lowest and highest point of each column of the window inside a planar
// cone; their hull equals the hull of all points.
std::vector<IntPoint> column_extremes(const FormCone& cone, std::int64_t window) {
  std::vector<IntPoint> out;
  const double w = static_cast<double>(window);
  for (std::int64_t x = -window; x <= window; ++x) {
    double lo = -w, hi = w;
    for (const auto& f : cone.forms) {
      double a = f.approx[0], b = f.approx[1];
      if (b == 0) continue;
      double t = -a * static_cast<double>(x) / b;
      if (b > 0) lo = std::max(lo, std::ceil(t));
      else hi = std::min(hi, std::floor(t));
    }
    if (lo > hi + 3) continue;
    auto ylo = static_cast<std::int64_t>(std::max(-w, lo - 3));
    auto yhi = static_cast<std::int64_t>(std::min(w, hi + 3));
    std::int64_t first = yhi + 1;
    for (std::int64_t y = ylo; y <= std::min(yhi, ylo + 7); ++y)
      if (cone.contains({x, y})) {
        first = y;
        break;
      }
    if (first > yhi) continue;
    std::int64_t last = first;
    for (std::int64_t y = yhi; y >= std::max(first, yhi - 7); --y)
      if (cone.contains({x, y})) {
        last = y;
        break;
      }
    out.push_back({x, first});
    if (last != first) out.push_back({x, last});
  }
  return out;
}

}  // namespace

Sail window_sail(const FormCone& cone, std::int64_t window) {
  const std::size_t n = cone.dim();
  Sail sail;
  sail.dim = static_cast<int>(n);
  sail.window = window;
  sail.complete = false;
  std::vector<IntPoint> pts = n == 2 ? column_extremes(cone, window) : cone_points(cone, window);
  if (n == 3) {
    // x = (x - u) + u with both parts in the cone is never a vertex, and
    // dropping it keeps every certified facet (see window_sail docs).
    std::vector<IntPoint> small = pts;
    std::sort(small.begin(), small.end(), [](const IntPoint& a, const IntPoint& b) {
      return std::make_pair(max_norm(a), a) < std::make_pair(max_norm(b), b);
    });
    if (small.size() > 12) small.resize(12);
    std::vector<IntPoint> kept;
    for (const auto& x : pts) {
      bool reducible = false;
      for (const auto& u : small)
        if (u != x && cone.contains(sub(x, u))) {
          reducible = true;
          break;
        }
      if (!reducible) kept.push_back(x);
    }
    pts = std::move(kept);
  }
  std::vector<HullFacet> facets;
  try {
    facets = convex_hull(pts);
  } catch (const Error& e) {
    if (e.code() != "degenerate-point-set") throw;
    return sail;
  }
  std::vector<std::vector<double>> ray_d(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& r : cone.rays[j]) ray_d[j].push_back(r.approx());

  std::vector<SailFace> faces;
  std::vector<std::vector<IntPoint>> face_pts;
  std::vector<IntPoint> extra;
  BigRat w(window);
  for (const auto& f : facets) {
    if (f.offset <= 0) continue;
    std::vector<int> sg(n);
    bool neg = false, zero = false;
    for (std::size_t j = 0; j < n; ++j) {
      sg[j] = normal_ray_sign(cone, f.normal, j);
      neg = neg || sg[j] < 0;
      zero = zero || sg[j] == 0;
    }
    if (neg) continue;
    BigRat c(static_cast<long>(f.offset));
    if (zero) {
      if (n != 2 || f.offset != 1) continue;
      std::size_t j = sg[0] == 0 ? 0 : 1;
      // Rational ray: primitive integer direction.
      std::vector<BigRat> r;
      for (const auto& e : cone.rays[j]) r.push_back(e.rational_value());
      BigInt l;
      mpz_lcm(l.get_mpz_t(), r[0].get_den().get_mpz_t(), r[1].get_den().get_mpz_t());
      BigInt a = BigRat(r[0] * l).get_num(), b = BigRat(r[1] * l).get_num();
      BigInt g = gcd(a, b);
      IntPoint dir{to_i64(a / g), to_i64(b / g)};
      const IntPoint& p = pts[f.vertices[0]];
      const IntPoint& q = pts[f.vertices[1]];
      IntPoint d = sub(q, p);
      const IntPoint& low = d[0] * dir[0] + d[1] * dir[1] > 0 ? p : q;
      if (!cone.contains(sub(low, dir))) extra.push_back(low);
      continue;
    }
    bool certified = true;
    for (std::size_t j = 0; j < n && certified; ++j) {
      FieldElem nr = dot_exact(cone.rays[j], f.normal);
      double nr_d = 0;
      for (std::size_t k = 0; k < n; ++k) nr_d += static_cast<double>(f.normal[k]) * ray_d[j][k];
      for (std::size_t k = 0; k < n && certified; ++k) {
        const FieldElem& r = cone.rays[j][k];
        certified = cap_sign(nr, nr_d, r, ray_d[j][k], w, c) >= 0 && cap_sign(nr, nr_d, -r, -ray_d[j][k], w, c) >= 0;
      }
    }
    if (!certified) continue;
    SailFace face;
    face.dim = static_cast<int>(n) - 1;
    face.normal = f.normal;
    face.distance = BigInt(static_cast<long>(f.offset));
    std::vector<IntPoint> fp;
    for (auto i : f.vertices) fp.push_back(pts[i]);
    faces.push_back(std::move(face));
    face_pts.push_back(std::move(fp));
  }

  std::vector<IntPoint> verts = extra;
  for (const auto& fp : face_pts) verts.insert(verts.end(), fp.begin(), fp.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (n == 2) {
    double o = ray_d[0][0] * ray_d[1][1] - ray_d[0][1] * ray_d[1][0] > 0 ? 1 : -1;
    std::sort(verts.begin(), verts.end(), [o](const IntPoint& a, const IntPoint& b) {
      return o * static_cast<double>(a[0] * b[1] - a[1] * b[0]) > 0;
    });
  }
  std::map<IntPoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& p : face_pts[i]) faces[i].vertices.push_back(index.at(p));
    if (n == 2 && faces[i].vertices[0] > faces[i].vertices[1]) std::swap(faces[i].vertices[0], faces[i].vertices[1]);
    annotate_face(faces[i], verts);
  }
  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    std::vector<std::size_t> v = faces[i].vertices;
    std::sort(v.begin(), v.end());
    return v;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (auto i : order) sail.faces.push_back(faces[i]);
  sail.vertices = std::move(verts);
  return sail;
}

}  // namespace sailkit
