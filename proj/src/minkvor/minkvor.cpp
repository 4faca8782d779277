#include "sailkit/minkvor/minkvor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sailkit/error.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

namespace {

bool dominates(const IntPoint& q, const IntPoint& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (q[i] > p[i]) return false;
  return true;
}

}  // namespace

SymLatticeWindow make_sym_lattice(const std::vector<IntPoint>& basis, std::int64_t window) {
  std::size_t n = basis.size();
  if (n != 2 && n != 3) fail("bad-basis", "lattices of rank 2 or 3 only");
  if (window < 1) fail("bad-window", "window must be positive");
  if (window > (n == 2 ? 5000 : 200)) fail("window-too-large", "window exceeds the enumeration cap", ErrorKind::resource_limit);
  std::vector<std::vector<BigInt>> cols;
  for (const auto& b : basis) {
    if (b.size() != n) fail("bad-basis", "basis vectors must have " + std::to_string(n) + " coordinates");
    cols.push_back(to_big(b));
  }
  IntMatrix m = IntMatrix::from_columns(cols);
  BigInt d = det(m);
  if (d == 0) fail("bad-basis", "basis vectors are linearly dependent");
  if (abs(d) > BigInt(1) << 40) fail("bad-basis", "determinant too large");
  // x is in the lattice iff adj(M) x = 0 mod det.
  IntMatrix adj = adjugate(m);
  std::int64_t dd = std::abs(to_i64(d));
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_i64(adj(i, j) % dd);
  SymLatticeWindow out{basis, window, {}};
  IntPoint x(n, -window);
  for (;;) {
    bool zero = true, in = true;
    for (auto c : x) zero = zero && c == 0;
    for (std::size_t i = 0; i < n && in && !zero; ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += __int128(a[i][j]) * x[j];
      in = s % dd == 0;
    }
    if (!zero && in) {
      IntPoint p = x;
      for (auto& c : p) c = std::abs(c);
      out.points.push_back(p);
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (++x[i] <= window) break;
      x[i] = -window;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

std::vector<IntPoint> local_minima(const SymLatticeWindow& lat) {
  std::vector<IntPoint> pts = lat.points;
  auto sum = [](const IntPoint& p) { return std::accumulate(p.begin(), p.end(), std::int64_t(0)); };
  std::stable_sort(pts.begin(), pts.end(), [&](const IntPoint& a, const IntPoint& b) { return sum(a) < sum(b); });
  // A dominating point has a smaller coordinate sum, and domination is
  // transitive, so comparing against earlier minima suffices.
  std::vector<IntPoint> minima;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& m : minima)
      if (dominates(m, p)) {
        dominated = true;
        break;
      }
    if (!dominated) minima.push_back(p);
  }
  std::size_t n = lat.basis.size();
  for (std::size_t axis = 0; axis < n; ++axis) {
    bool found = false;
    for (const auto& m : minima) {
      bool on = true;
      for (std::size_t j = 0; j < n; ++j) on = on && (j == axis || m[j] == 0);
      found = found || on;
    }
    if (!found)
      fail("window-too-small",
           "no lattice point on axis " + std::to_string(axis) + " within window " + std::to_string(lat.window) +
               "; enlarge the window",
           ErrorKind::resource_limit);
  }
  std::sort(minima.begin(), minima.end());
  return minima;
}

Staircase mv_sail(const SymLatticeWindow& lat) {
  Staircase s;
  s.minima = local_minima(lat);
  const auto& mins = s.minima;
  std::size_t k = mins.size(), n = lat.basis.size();
  // Outer corner x: x[i] = q_i[i] for supporting minima q_i with q_i[j] < x[j]
  // (j != i), and no minimum strictly below x.
  auto nodes_from = [&](std::size_t first) {
    std::vector<IntPoint> out;
    std::vector<std::size_t> pick(n, 0);
    pick[0] = first;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
      if (level == n) {
        IntPoint x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = mins[pick[i]][i];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (j != i && mins[pick[i]][j] >= x[j]) return;
        for (const auto& m : mins) {
          bool below = true;
          for (std::size_t j = 0; j < n && below; ++j) below = m[j] < x[j];
          if (below) return;
        }
        out.push_back(x);
        return;
      }
      for (std::size_t q = 0; q < k; ++q) {
        pick[level] = q;
        rec(level + 1);
      }
    };
    rec(1);
    return out;
  };
  auto parts = parallel_map<std::vector<IntPoint>>(k, nodes_from);
  for (auto& p : parts) s.nodes.insert(s.nodes.end(), p.begin(), p.end());
  std::sort(s.nodes.begin(), s.nodes.end());
  s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t axis = 0; axis < n; ++axis) {
      StaircaseFacet f{m, static_cast<int>(axis), {}};
      for (std::size_t v = 0; v < s.nodes.size(); ++v) {
        const auto& x = s.nodes[v];
        if (x[axis] == mins[m][axis] && dominates(mins[m], x)) f.nodes.push_back(v);
      }
      if (!f.nodes.empty()) s.facets.push_back(std::move(f));
    }
  return s;
}

StairSide classify(const Staircase& s, const std::vector<BigRat>& x) {
  bool under = true;
  for (const auto& m : s.minima) {
    bool strictly_below = true, some_less = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      strictly_below = strictly_below && BigRat(m[i]) < x[i];
      some_less = some_less || x[i] < BigRat(m[i]);
    }
    if (strictly_below) return StairSide::above;
    under = under && some_less;
  }
  return under ? StairSide::under : StairSide::on;
}

bool box_is_empty(const SymLatticeWindow& lat, const std::vector<BigRat>& x) {
  for (const auto& q : lat.points) {
    bool inside = true;
    for (std::size_t i = 0; i < q.size() && inside; ++i) inside = BigRat(q[i]) < x[i];
    if (inside) return false;
  }
  return true;
}

}  // namespace sailkit
