#include "sailkit/klein/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "sailkit/error.hpp"

namespace sailkit {

namespace {

using P3 = std::array<i128, 3>;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

P3 sub(const IntPoint& a, const IntPoint& b) { return {i128(a[0]) - b[0], i128(a[1]) - b[1], i128(a[2]) - b[2]}; }

P3 cross(const P3& u, const P3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

i128 dot(const P3& u, const P3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

IntPoint primitive(const P3& v, int dim) {
  i128 g = 0;
  for (int i = 0; i < dim; ++i) g = gcd128(g, v[i]);
  IntPoint out(dim);
  for (int i = 0; i < dim; ++i) out[i] = static_cast<std::int64_t>(v[i] / g);
  return out;
}

// Strict lower/upper monotone chain over 2D points, counter-clockwise.
std::vector<std::size_t> hull2d(const std::vector<std::array<i128, 2>>& pts, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) - (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

void check_points(const std::vector<IntPoint>& points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.size() != dim) fail("dimension-mismatch", "hull points must share one dimension");
    for (auto c : p)
      if (c >= kHullCoordLimit || c <= -kHullCoordLimit)
        fail("coordinate-overflow", "hull coordinate " + std::to_string(c) + " beyond the exact range");
  }
}

std::vector<HullFacet> hull_2d(const std::vector<IntPoint>& points) {
  std::vector<std::array<i128, 2>> pts;
  for (const auto& p : points) pts.push_back({p[0], p[1]});
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto h = hull2d(pts, idx);
  if (h.size() < 3) fail("degenerate-point-set", "points are collinear");
  std::vector<HullFacet> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const IntPoint& a = points[h[i]];
    const IntPoint& b = points[h[(i + 1) % h.size()]];
    // Interior lies to the left of a -> b.
    P3 n{-(i128(b[1]) - a[1]), i128(b[0]) - a[0], 0};
    HullFacet f;
    f.normal = primitive(n, 2);
    f.offset = i128(f.normal[0]) * a[0] + i128(f.normal[1]) * a[1];
    f.vertices = {h[i], h[(i + 1) % h.size()]};
    out.push_back(std::move(f));
  }
  return out;
}

struct Tri {
  std::size_t v[3];
  P3 n;  // outer normal
  i128 off;
  bool alive = true;
};

std::vector<HullFacet> hull_3d(const std::vector<IntPoint>& points) {
  const std::size_t np = points.size();
  // Initial tetrahedron.
  std::size_t i0 = 0, i1 = np, i2 = np, i3 = np;
  for (std::size_t i = 1; i < np && i1 == np; ++i)
    if (points[i] != points[i0]) i1 = i;
  if (i1 == np) fail("degenerate-point-set", "points do not span space");
  P3 e1 = sub(points[i1], points[i0]);
  for (std::size_t i = 0; i < np && i2 == np; ++i) {
    P3 c = cross(e1, sub(points[i], points[i0]));
    if (c != P3{0, 0, 0}) i2 = i;
  }
  if (i2 == np) fail("degenerate-point-set", "points are collinear");
  P3 n012 = cross(e1, sub(points[i2], points[i0]));
  for (std::size_t i = 0; i < np && i3 == np; ++i)
    if (dot(n012, sub(points[i], points[i0])) != 0) i3 = i;
  if (i3 == np) fail("degenerate-point-set", "points are coplanar");

  std::vector<Tri> tris;
  std::unordered_map<std::uint64_t, std::size_t> edge_owner;  // directed edge -> triangle
  auto key = [np](std::size_t a, std::size_t b) { return static_cast<std::uint64_t>(a) * np + b; };
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    Tri t{{a, b, c}, cross(sub(points[b], points[a]), sub(points[c], points[a])), 0, true};
    t.off = dot(t.n, P3{points[a][0], points[a][1], points[a][2]});
    std::size_t id = tris.size();
    tris.push_back(t);
    edge_owner[key(a, b)] = id;
    edge_owner[key(b, c)] = id;
    edge_owner[key(c, a)] = id;
  };
  if (dot(n012, sub(points[i3], points[i0])) > 0) std::swap(i1, i2);
  add(i0, i1, i2);
  add(i0, i3, i1);
  add(i1, i3, i2);
  add(i2, i3, i0);

  auto above = [&](const Tri& t, std::size_t p) {
    return dot(t.n, P3{points[p][0], points[p][1], points[p][2]}) > t.off;
  };

  std::vector<std::size_t> alive_ids{0, 1, 2, 3};
  std::vector<char> visible;
  for (std::size_t p = 0; p < np; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    visible.assign(tris.size(), 0);
    bool any = false;
    for (std::size_t id : alive_ids)
      if (above(tris[id], p)) visible[id] = any = true;
    if (!any) continue;
    std::vector<std::pair<std::size_t, std::size_t>> horizon;
    for (std::size_t id : alive_ids) {
      if (!visible[id]) continue;
      const Tri& t = tris[id];
      for (int e = 0; e < 3; ++e) {
        std::size_t a = t.v[e], b = t.v[(e + 1) % 3];
        std::size_t twin = edge_owner.at(key(b, a));
        if (!visible[twin]) horizon.emplace_back(a, b);
      }
    }
    for (std::size_t id : alive_ids) {
      if (!visible[id]) continue;
      Tri& t = tris[id];
      t.alive = false;
      for (int e = 0; e < 3; ++e) edge_owner.erase(key(t.v[e], t.v[(e + 1) % 3]));
    }
    std::vector<std::size_t> next;
    for (std::size_t id : alive_ids)
      if (tris[id].alive) next.push_back(id);
    for (auto [a, b] : horizon) {
      next.push_back(tris.size());
      add(a, b, p);
    }
    alive_ids = std::move(next);
  }

  // Merge coplanar triangles: a supporting plane meets the hull in one face.
  std::map<std::pair<IntPoint, i128>, std::vector<std::size_t>> groups;
  for (std::size_t id : alive_ids) {
    IntPoint inner = primitive(P3{-tris[id].n[0], -tris[id].n[1], -tris[id].n[2]}, 3);
    const IntPoint& a = points[tris[id].v[0]];
    i128 off = i128(inner[0]) * a[0] + i128(inner[1]) * a[1] + i128(inner[2]) * a[2];
    auto& g = groups[{inner, off}];
    for (auto v : tris[id].v) g.push_back(v);
  }
  std::vector<HullFacet> out;
  for (auto& [k, verts] : groups) {
    const IntPoint& n = k.first;
    // Project along the largest normal component; flip so the projected
    // polygon is counter-clockwise seen from outside (along -n).
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(n[i]) > std::abs(n[drop])) drop = i;
    int u = (drop + 1) % 3, w = (drop + 2) % 3;
    std::vector<std::array<i128, 2>> pts(np);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (auto v : verts) pts[v] = {points[v][u], points[v][w]};
    auto poly = hull2d(pts, verts);
    // (u, w, drop) is a cyclic frame, so ccw in (u, w) looks ccw from +e_drop.
    if (n[drop] > 0) std::reverse(poly.begin(), poly.end());
    out.push_back(HullFacet{n, k.second, std::move(poly)});
  }
  return out;
}

}  // namespace

i128 dot128(const IntPoint& a, const IntPoint& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += i128(a[i]) * b[i];
  return s;
}

std::vector<HullFacet> convex_hull(const std::vector<IntPoint>& points) {
  if (points.empty()) fail("degenerate-point-set", "no points");
  std::size_t dim = points[0].size();
  if (dim != 2 && dim != 3) fail("dimension-mismatch", "hulls are computed in dimension 2 or 3");
  check_points(points, dim);
  return dim == 2 ? hull_2d(points) : hull_3d(points);
}

std::vector<std::size_t> hull_vertices(const std::vector<HullFacet>& facets) {
  std::vector<std::size_t> out;
  for (const auto& f : facets) out.insert(out.end(), f.vertices.begin(), f.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sailkit
