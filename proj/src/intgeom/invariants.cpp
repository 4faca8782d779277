#include "sailkit/intgeom/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sailkit/error.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

std::vector<BigInt> to_big(const IntPoint& p) {
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

std::vector<BigInt> diff(const IntPoint& b, const IntPoint& a) {
  if (a.size() != b.size()) fail("dimension-mismatch", "points of different dimension");
  std::vector<BigInt> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = BigInt(static_cast<long>(b[i])) - static_cast<long>(a[i]);
  return v;
}

namespace {

void check_dim(const IntPoint& p) {
  if (p.size() != 2 && p.size() != 3) fail("bad-dimension", "points must have 2 or 3 coordinates");
}

BigInt content(const std::vector<BigInt>& v) {
  BigInt g(0);
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::vector<BigInt> primitive(std::vector<BigInt> v) {
  BigInt g = content(v);
  for (auto& x : v) x /= g;
  return v;
}

bool is_zero(const std::vector<BigInt>& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

BigInt int_length(const IntPoint& a, const IntPoint& b) {
  check_dim(a);
  auto d = diff(b, a);
  if (is_zero(d)) fail("degenerate-segment", "segment endpoints coincide");
  return content(d);
}

BigInt int_sine(const IntPoint& vertex, const IntPoint& ray1, const IntPoint& ray2) {
  check_dim(vertex);
  auto d1 = diff(ray1, vertex), d2 = diff(ray2, vertex);
  if (is_zero(d1) || is_zero(d2)) fail("zero-direction", "ray point coincides with the vertex");
  IntMatrix m = IntMatrix::from_columns({primitive(d1), primitive(d2)});
  if (rank(m) < 2) fail("collinear-rays", "rays are collinear");
  return sublattice_index(m);
}

BigInt int_area(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
  check_dim(a);
  IntMatrix m = IntMatrix::from_columns({diff(b, a), diff(c, a)});
  if (rank(m) < 2) fail("collinear-points", "triangle vertices are collinear");
  return sublattice_index(m);
}

BigInt int_distance(const IntPoint& p, const std::vector<IntPoint>& subspace) {
  check_dim(p);
  if (subspace.empty()) fail("empty-subspace", "subspace needs at least one integer point");
  const IntPoint& q = subspace[0];
  std::vector<std::vector<BigInt>> dirs;
  for (std::size_t i = 1; i < subspace.size(); ++i) dirs.push_back(diff(subspace[i], q));
  std::vector<std::vector<BigInt>> cols;
  if (!dirs.empty()) {
    // Basis of the lattice generated by the directions, then its saturation.
    IntMatrix h = hnf_column(IntMatrix::from_columns(dirs));
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (!is_zero(h.column(j))) basis.push_back(h.column(j));
    if (!basis.empty()) {
      IntMatrix sat = saturation(IntMatrix::from_columns(basis));
      for (std::size_t j = 0; j < sat.cols(); ++j) cols.push_back(sat.column(j));
    }
  }
  cols.push_back(diff(p, q));
  IntMatrix m = IntMatrix::from_columns(cols);
  if (rank(m) < static_cast<int>(cols.size())) fail("point-on-subspace", "point lies on the subspace");
  return sublattice_index(m);
}

void validate_simplex(const IntSimplex& s) {
  if (s.vertices.empty()) fail("degenerate-simplex", "simplex without vertices");
  std::size_t n = s.vertices[0].size();
  check_dim(s.vertices[0]);
  if (s.vertices.size() > n + 1) fail("degenerate-simplex", "too many vertices for the dimension");
  for (const auto& v : s.vertices) {
    if (v.size() != n) fail("dimension-mismatch", "vertices of different dimension");
    for (auto x : v)
      if (x > (1 << 20) || x < -(1 << 20)) fail("coordinate-too-large", "simplex coordinates must stay below 2^20");
  }
  if (s.vertices.size() == 1) return;
  std::vector<std::vector<BigInt>> edges;
  for (std::size_t i = 1; i < s.vertices.size(); ++i) edges.push_back(diff(s.vertices[i], s.vertices[0]));
  if (rank(IntMatrix::from_rows(edges)) != static_cast<int>(edges.size()))
    fail("degenerate-simplex", "vertices are affinely dependent");
}

namespace {

using i128 = __int128;

// Exact barycentric membership for a k-simplex in Z^n with small coordinates.
struct Membership {
  std::size_t n = 0, k = 0;
  std::vector<std::int64_t> v0;
  std::vector<std::vector<std::int64_t>> edges;  // k x n
  std::vector<std::size_t> cols;                 // k coordinates with nonzero minor
  std::vector<std::vector<std::int64_t>> adj;    // adjugate of the k x k minor
  std::int64_t det = 1;

  explicit Membership(const IntSimplex& s) {
    n = s.vertices[0].size();
    k = s.vertices.size() - 1;
    v0 = s.vertices[0];
    for (std::size_t i = 1; i <= k; ++i) {
      std::vector<std::int64_t> e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = s.vertices[i][j] - v0[j];
      edges.push_back(e);
    }
    // Pick k columns with a nonsingular minor.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> c;
      for (std::size_t j = 0; j < n; ++j)
        if (mask[j]) c.push_back(j);
      IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = static_cast<long>(edges[i][c[j]]);
      BigInt d = sailkit::det(minor);
      if (d != 0) {
        cols = c;
        this->det = to_i64(d);
        IntMatrix a = adjugate(minor);
        adj.assign(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) adj[i][j] = to_i64(a(i, j));
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }

  bool contains(const std::vector<std::int64_t>& x) const {
    // mu = D * lambda, with (x - v0)_J = lambda * E_J, so mu = (x - v0)_J * adj(E_J).
    std::vector<i128> mu(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) mu[j] += static_cast<i128>(x[cols[i]] - v0[cols[i]]) * adj[i][j];
    i128 d = det, sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      i128 m = d > 0 ? mu[j] : -mu[j];
      if (m < 0) return false;
      sum += m;
    }
    if (sum > (d > 0 ? d : -d)) return false;
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      i128 lhs = static_cast<i128>(x[c] - v0[c]) * d, rhs = 0;
      for (std::size_t j = 0; j < k; ++j) rhs += mu[j] * edges[j][c];
      if (lhs != rhs) return false;
    }
    return true;
  }
};

template <class F>
void scan_box(const IntSimplex& s, F&& visit) {
  std::size_t n = s.vertices[0].size();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = s.vertices[0][j];
    for (const auto& v : s.vertices) lo[j] = std::min(lo[j], v[j]), hi[j] = std::max(hi[j], v[j]);
  }
  std::vector<std::int64_t> x = lo;
  for (;;) {
    if (!visit(x)) return;
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) x[j] = lo[j], ++j;
    if (j == n) return;
    ++x[j];
  }
}

}  // namespace

std::vector<IntPoint> lattice_points(const IntSimplex& s) {
  validate_simplex(s);
  std::vector<IntPoint> out;
  if (s.vertices.size() == 1) return {s.vertices[0]};
  Membership m(s);
  scan_box(s, [&](const std::vector<std::int64_t>& x) {
    if (m.contains(x)) out.push_back(x);
    return true;
  });
  return out;
}

bool is_empty(const IntSimplex& s) {
  validate_simplex(s);
  if (s.vertices.size() == 1) return true;
  Membership m(s);
  bool empty = true;
  scan_box(s, [&](const std::vector<std::int64_t>& x) {
    if (!m.contains(x)) return true;
    if (std::find(s.vertices.begin(), s.vertices.end(), x) == s.vertices.end()) empty = false;
    return empty;
  });
  return empty;
}

BigInt lattice_width(const IntSimplex& s) {
  validate_simplex(s);
  std::size_t n = s.vertices[0].size();
  if (s.vertices.size() != n + 1) fail("not-full-dimensional", "lattice width needs a full-dimensional simplex");
  std::int64_t w0 = -1;
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t lo = s.vertices[0][j], hi = lo;
    for (const auto& v : s.vertices) lo = std::min(lo, v[j]), hi = std::max(hi, v[j]);
    if (w0 < 0 || hi - lo < w0) w0 = hi - lo;
  }
  // A functional f of width w has g = E f in [-w, w]^n, and f = adj(E) g / det(E)
  // must be integral. Search w = 1, 2, ... below the coordinate bound.
  std::vector<std::vector<BigInt>> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back(diff(s.vertices[i], s.vertices[0]));
  IntMatrix e = IntMatrix::from_rows(edges);
  IntMatrix adj = adjugate(e);
  std::int64_t d = to_i64(det(e));
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_i64(adj(i, j));
  for (std::int64_t w = 1; w < w0; ++w) {
    std::vector<std::int64_t> g(n, -w);
    for (;;) {
      std::int64_t mx = 0, mn = 0;
      bool nonzero = false;
      for (auto x : g) mx = std::max(mx, x), mn = std::min(mn, x), nonzero = nonzero || x != 0;
      if (nonzero && mx - mn <= w) {
        bool integral = true;
        for (std::size_t i = 0; i < n && integral; ++i) {
          i128 t = 0;
          for (std::size_t j = 0; j < n; ++j) t += static_cast<i128>(a[i][j]) * g[j];
          integral = t % d == 0;
        }
        if (integral) return BigInt(static_cast<long>(mx - mn));
      }
      std::size_t j = 0;
      while (j < n && g[j] == w) g[j] = -w, ++j;
      if (j == n) break;
      ++g[j];
    }
  }
  return BigInt(static_cast<long>(w0));
}

IntMatrix simplex_normal_form(const IntSimplex& s) {
  validate_simplex(s);
  std::size_t m = s.vertices.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix best;
  bool have = false;
  do {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 1; i < m; ++i) rows.push_back(diff(s.vertices[perm[i]], s.vertices[perm[0]]));
    IntMatrix h = hnf_column(IntMatrix::from_rows(rows));
    if (!have || h < best) best = h, have = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

IntSimplex EmptySimplexClass::simplex() const {
  IntSimplex s;
  s.vertices.push_back(IntPoint(normal_form.cols(), 0));
  for (std::size_t i = 0; i < normal_form.rows(); ++i) {
    IntPoint p;
    for (std::size_t j = 0; j < normal_form.cols(); ++j) p.push_back(to_i64(normal_form(i, j)));
    s.vertices.push_back(p);
  }
  return s;
}

std::vector<EmptySimplexClass> enumerate_empty_simplices_3d(int max_volume, int cap) {
  if (max_volume < 1) fail("bad-input", "max_volume must be at least 1");
  if (max_volume > cap)
    fail("resource-limit", "max_volume " + std::to_string(max_volume) + " exceeds the cap " + std::to_string(cap),
         ErrorKind::resource_limit);
  auto per_volume = parallel_map<std::vector<EmptySimplexClass>>(
      static_cast<std::size_t>(max_volume), [&](std::size_t idx) {
        long vol = static_cast<long>(idx) + 1;
        std::set<IntMatrix> seen;
        std::vector<EmptySimplexClass> found;
        for (long a = 1; a <= vol; ++a) {
          if (vol % a) continue;
          for (long d = 1; d <= vol / a; ++d) {
            if ((vol / a) % d) continue;
            long f = vol / a / d;
            for (long b = 0; b < d; ++b)
              for (long c = 0; c < f; ++c)
                for (long e = 0; e < f; ++e) {
                  IntSimplex s{{{0, 0, 0}, {a, 0, 0}, {b, d, 0}, {c, e, f}}};
                  if (!is_empty(s)) continue;
                  IntMatrix nf = simplex_normal_form(s);
                  if (!seen.insert(nf).second) continue;
                  EmptySimplexClass cls{nf, BigInt(vol), BigInt(0)};
                  cls.width = lattice_width(cls.simplex());
                  found.push_back(std::move(cls));
                }
          }
        }
        std::sort(found.begin(), found.end(),
                  [](const EmptySimplexClass& x, const EmptySimplexClass& y) { return x.normal_form < y.normal_form; });
        return found;
      });
  std::vector<EmptySimplexClass> out;
  for (auto& v : per_volume)
    for (auto& c : v) out.push_back(std::move(c));
  return out;
}

}  // namespace sailkit
