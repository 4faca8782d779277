#include "sailkit/klein/klein.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sailkit/error.hpp"
#include "sailkit/klein/hull.hpp"

namespace sailkit {

namespace {

IntMatrix generator_matrix(const ConeSpec& cone) {
  std::vector<std::vector<BigInt>> cols;
  for (const auto& g : cone.generators) cols.push_back(to_big(g));
  return IntMatrix::from_columns(cols);
}

IntPoint add(const IntPoint& a, const IntPoint& b) {
  IntPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::int64_t max_norm(const IntPoint& p) {
  std::int64_t m = 0;
  for (auto c : p) m = std::max<std::int64_t>(m, std::abs(c));
  return m;
}

// Lattice points of the half-open parallelepiped spanned by the generators,
// one per coset of the generated sublattice.
std::vector<IntPoint> parallelepiped_points(const ConeSpec& cone) {
  IntMatrix g = generator_matrix(cone);
  IntMatrix h = hnf_column(g);
  IntMatrix adj = adjugate(g);
  BigInt d = det(g);
  std::size_t n = g.rows();
  std::vector<BigInt> x(n, BigInt(0));
  std::vector<IntPoint> out;
  for (;;) {
    std::vector<BigInt> lam = adj.apply(x);
    std::vector<BigInt> fl(n);
    for (std::size_t i = 0; i < n; ++i) fl[i] = floor_div(lam[i], d);
    std::vector<BigInt> shift = g.apply(fl);
    IntPoint p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = to_i64(x[i] - shift[i]);
    out.push_back(p);
    std::size_t i = 0;
    while (i < n) {
      x[i] += 1;
      if (x[i] < h(i, i)) break;
      x[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

void validate_cone(ConeSpec& cone) {
  std::size_t n = cone.generators.size();
  if (n != 2 && n != 3) fail("bad-cone", "cones need 2 or 3 generators");
  for (auto& g : cone.generators) {
    if (g.size() != n) fail("bad-cone", "generators must have " + std::to_string(n) + " coordinates");
    std::int64_t gg = 0;
    for (auto c : g) gg = std::gcd(gg, c);
    if (gg == 0) fail("bad-cone", "zero generator");
    for (auto& c : g) c /= gg;
    if (max_norm(g) >= kHullCoordLimit / 8) fail("coordinate-overflow", "generator entries too large");
  }
  if (det(generator_matrix(cone)) == 0) fail("bad-cone", "generators are linearly dependent");
}

std::vector<IntPoint> lattice_points_in_cone(const ConeSpec& cone_in, std::int64_t bound) {
  ConeSpec cone = cone_in;
  validate_cone(cone);
  IntMatrix g = generator_matrix(cone);
  IntMatrix adj = adjugate(g);
  int s = sign(det(g));
  std::size_t n = g.rows();
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_i64(adj(i, j)) * s;
  std::vector<IntPoint> out;
  IntPoint x(n, -bound);
  for (;;) {
    bool in = false;
    for (auto c : x) in = in || c != 0;
    for (std::size_t i = 0; i < n && in; ++i) {
      i128 v = 0;
      for (std::size_t j = 0; j < n; ++j) v += a[i][j] * x[j];
      in = v >= 0;
    }
    if (in) out.push_back(x);
    std::size_t i = n;
    while (i-- > 0) {
      if (++x[i] <= bound) break;
      x[i] = -bound;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

IntMatrix face_normal_form(const std::vector<IntPoint>& face) {
  if (face.empty()) fail("non-planar", "empty face");
  std::size_t k = face.size(), n = face[0].size();
  if (k == 1) return IntMatrix(0, 0);
  std::vector<std::vector<BigInt>> cols;
  for (std::size_t i = 1; i < k; ++i) cols.push_back(diff(face[i], face[0]));
  SmithForm sf = smith(IntMatrix::from_columns(cols));
  std::size_t r = sf.diagonal().size();
  if (r > 2) fail("non-planar", "face vertices do not lie in a plane");
  auto coords = [&](const IntPoint& p, const IntPoint& base) {
    std::vector<BigInt> y = sf.left.apply(diff(p, base));
    for (std::size_t i = r; i < n; ++i)
      if (y[i] != 0) fail("internal", "face point outside its plane lattice", ErrorKind::internal);
    y.resize(r);
    return y;
  };
  IntMatrix best;
  bool have = false;
  for (std::size_t s = 0; s < k; ++s)
    for (int dir : {1, -1}) {
      std::vector<std::vector<BigInt>> c;
      for (std::size_t j = 1; j < k; ++j) {
        std::size_t idx = dir > 0 ? (s + j) % k : (s + k - j) % k;
        c.push_back(coords(face[idx], face[s]));
      }
      IntMatrix m = hnf_row(IntMatrix::from_columns(c));
      if (!have || m < best) {
        best = m;
        have = true;
      }
    }
  return best;
}

FaceType face_type(const std::vector<IntPoint>& face, const BigInt& origin_distance) {
  return FaceType{face_normal_form(face), origin_distance};
}

void annotate_face(SailFace& f, const std::vector<IntPoint>& vertices) {
  std::vector<IntPoint> pts;
  for (auto i : f.vertices) pts.push_back(vertices[i]);
  if (f.dim == 1 && pts.size() == 2) f.length = int_length(pts[0], pts[1]);
  if (f.dim == 2) {
    f.area = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) f.area += int_area(pts[0], pts[i], pts[i + 1]);
  }
  f.normal_form = face_normal_form(pts);
}

Sail klein_sail(ConeSpec cone, std::int64_t window) {
  validate_cone(cone);
  const std::size_t n = cone.generators.size();
  std::vector<IntPoint> s;
  for (auto& p : parallelepiped_points(cone))
    if (max_norm(p) != 0) s.push_back(p);
  for (const auto& g : cone.generators) s.push_back(g);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::int64_t need = 0;
  for (const auto& p : s) need = std::max(need, max_norm(p));
  if (window != 0 && window < need)
    fail("window-too-small", "window " + std::to_string(window) + " does not contain the fundamental region; use " +
                                 std::to_string(need) + " or more", ErrorKind::resource_limit);

  // The hull of all cone points is conv(s) + cone. A face off the cone
  // boundary has its normal in the dual cone; it cannot be parallel to a
  // generator (the generators lie in the hull), so every such face is a
  // compact face of conv(s).
  std::vector<IntPoint> v;
  try {
    auto h1 = convex_hull(s);
    for (auto i : hull_vertices(h1)) v.push_back(s[i]);
  } catch (const Error& e) {
    if (e.code() != "degenerate-point-set") throw;
    v = s;
  }
  // Translates keep the point set full-dimensional for unimodular cones.
  std::vector<IntPoint> t = v;
  for (const auto& p : v)
    for (const auto& g : cone.generators) t.push_back(add(p, g));
  auto facets = convex_hull(t);

  Sail sail;
  sail.dim = static_cast<int>(n);
  sail.window = need;
  sail.complete = true;
  std::vector<SailFace> faces;
  std::vector<std::vector<IntPoint>> face_pts;
  for (const auto& f : facets) {
    if (f.offset <= 0) continue;
    bool dual = true;
    for (const auto& g : cone.generators) {
      i128 d = dot128(f.normal, g);
      if (d < 0) dual = false;
      // The generators are points of the hull, so n.g >= offset > 0.
      if (d == 0) fail("internal", "sail face parallel to a generator", ErrorKind::internal);
    }
    if (!dual) continue;
    SailFace face;
    face.dim = static_cast<int>(n) - 1;
    face.normal = f.normal;
    face.distance = BigInt(static_cast<long>(f.offset));
    std::vector<IntPoint> pts;
    for (auto i : f.vertices) pts.push_back(t[i]);
    faces.push_back(std::move(face));
    face_pts.push_back(std::move(pts));
  }

  std::vector<IntPoint> verts;
  for (const auto& fp : face_pts) verts.insert(verts.end(), fp.begin(), fp.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (n == 2) {
    // Chain order from the first generator to the second.
    std::map<IntPoint, IntPoint> next;
    for (const auto& fp : face_pts) {
      const IntPoint& a = fp[0];
      const IntPoint& b = fp[1];
      bool forward = (i128(a[0]) * b[1] - i128(a[1]) * b[0]) * sign(det(generator_matrix(cone))) > 0;
      if (forward) next[a] = b;
      else next[b] = a;
    }
    verts.clear();
    IntPoint cur = cone.generators[0];
    verts.push_back(cur);
    while (next.count(cur)) {
      cur = next[cur];
      verts.push_back(cur);
    }
    if (verts.size() != face_pts.size() + 1) fail("internal", "2D sail is not a chain", ErrorKind::internal);
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      const IntPoint& a = verts[i];
      const IntPoint& b = verts[i + 1];
      std::int64_t m = std::gcd(std::abs(b[0] - a[0]), std::abs(b[1] - a[1]));
      for (std::int64_t j = 0; j < m; ++j)
        sail.lattice_points.push_back({a[0] + (b[0] - a[0]) / m * j, a[1] + (b[1] - a[1]) / m * j});
    }
    sail.lattice_points.push_back(verts.back());
  }
  std::map<IntPoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& p : face_pts[i]) faces[i].vertices.push_back(index.at(p));
    annotate_face(faces[i], verts);
  }
  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  auto sorted_pts = [&](std::size_t i) {
    auto p = face_pts[i];
    std::sort(p.begin(), p.end());
    return p;
  };
  if (n == 2) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::min(faces[a].vertices[0], faces[a].vertices[1]) < std::min(faces[b].vertices[0], faces[b].vertices[1]);
    });
    for (auto& f : faces)
      if (f.vertices[0] > f.vertices[1]) std::swap(f.vertices[0], f.vertices[1]);
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sorted_pts(a) < sorted_pts(b); });
  }
  for (auto i : order) sail.faces.push_back(faces[i]);
  sail.vertices = std::move(verts);
  return sail;
}

std::vector<std::vector<IntPoint>> face_point_lists(const Sail& sail) {
  std::vector<std::vector<IntPoint>> out;
  for (const auto& f : sail.faces) {
    std::vector<IntPoint> pts;
    for (auto i : f.vertices) pts.push_back(sail.vertices[i]);
    out.push_back(std::move(pts));
  }
  return out;
}

std::string to_off(const Sail& sail) {
  std::ostringstream os;
  os << "OFF\n" << sail.vertices.size() << ' ' << sail.faces.size() << " 0\n";
  for (const auto& v : sail.vertices) os << v[0] << ' ' << v[1] << ' ' << (v.size() > 2 ? v[2] : 0) << '\n';
  for (const auto& f : sail.faces) {
    os << f.vertices.size();
    for (auto i : f.vertices) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

}  // namespace sailkit
