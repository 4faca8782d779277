#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "sailkit/contfrac/contfrac.hpp"
#include "sailkit/error.hpp"
#include "sailkit/minkvor/minkvor.hpp"

using namespace sailkit;

namespace {

std::vector<IntPoint> brute_minima(const SymLatticeWindow& lat) {
  std::vector<IntPoint> out;
  for (const auto& p : lat.points) {
    bool dominated = false;
    for (const auto& q : lat.points) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t i = 0; i < p.size(); ++i) le = le && q[i] <= p[i];
      dominated = dominated || le;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<IntPoint> random_basis(std::size_t n, long bound) {
  for (;;) {
    std::vector<IntPoint> b(n, IntPoint(n));
    for (auto& v : b)
      for (auto& c : v) c = gen::uniform(-bound, bound);
    std::vector<std::vector<BigInt>> cols;
    for (const auto& v : b) cols.push_back(to_big(v));
    if (det(IntMatrix::from_columns(cols)) != 0) return b;
  }
}

std::int64_t det3(const std::vector<IntPoint>& b) {
  std::vector<std::vector<BigInt>> cols;
  for (const auto& v : b) cols.push_back(to_big(v));
  return to_i64(det(IntMatrix::from_columns(cols)));
}

bool within(const IntPoint& p, std::int64_t w) {
  return std::all_of(p.begin(), p.end(), [w](auto c) { return c <= w; });
}

}  // namespace

TEST_CASE("local_minima examples") {
  CHECK(local_minima(make_sym_lattice({{1, 0}, {0, 1}}, 3)) == std::vector<IntPoint>{{0, 1}, {1, 0}});
  CHECK(local_minima(make_sym_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2)) ==
        std::vector<IntPoint>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  // (1,1) = |(2,1) - (1,2)| dominates (1,2) and (2,1).
  auto lat = make_sym_lattice({{2, 1}, {1, 2}}, 12);
  CHECK(local_minima(lat) == std::vector<IntPoint>{{0, 3}, {1, 1}, {3, 0}});
  CHECK(local_minima(lat) == brute_minima(lat));
  try {
    local_minima(make_sym_lattice({{1, 0}, {3, 7}}, 5));
    FAIL("expected window-too-small");
  } catch (const Error& e) {
    CHECK(e.code() == "window-too-small");
  }
  CHECK_THROWS_AS(make_sym_lattice({{1, 2}, {2, 4}}, 5), Error);
}

TEST_CASE("mv_sail examples") {
  Staircase s = mv_sail(make_sym_lattice({{1, 0}, {0, 1}}, 3));
  CHECK(s.nodes == std::vector<IntPoint>{{1, 1}});
  REQUIRE(s.facets.size() == 2);
  CHECK(s.facets[0].minimum == 0);
  CHECK(s.facets[0].axis == 1);
  CHECK(s.facets[1].axis == 0);

  Staircase t = mv_sail(make_sym_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2));
  CHECK(t.nodes == std::vector<IntPoint>{{1, 1, 1}});
  CHECK(t.facets.size() == 3);
  for (const auto& f : t.facets) CHECK(f.nodes == std::vector<std::size_t>{0});

  Staircase u = mv_sail(make_sym_lattice({{2, 1}, {1, 2}}, 12));
  CHECK(u.minima == std::vector<IntPoint>{{0, 3}, {1, 1}, {3, 0}});
  CHECK(u.nodes == std::vector<IntPoint>{{1, 3}, {3, 1}});
}

TEST_CASE("property: minima equal the brute-force domination set") {
  for (int it = 0; it < 20; ++it) {
    auto lat = make_sym_lattice(random_basis(2, 6), 40);
    CHECK(local_minima(lat) == brute_minima(lat));
  }
  for (int it = 0; it < 5; ++it) {
    auto b = random_basis(3, 2);
    // det * e_i is a lattice point, so this window reaches every axis.
    auto lat = make_sym_lattice(b, std::max<std::int64_t>(3, std::abs(det3(b))));
    CHECK(local_minima(lat) == brute_minima(lat));
  }
}

TEST_CASE("property: free region agrees with direct box tests") {
  int under = 0, above = 0;
  for (int it = 0; it < 10; ++it) {
    auto lat = make_sym_lattice(random_basis(2, 5), 30);
    Staircase s = mv_sail(lat);
    for (int k = 0; k < 100; ++k) {
      std::vector<BigRat> x{BigRat(gen::uniform(0, 24), 4), BigRat(gen::uniform(0, 24), 4)};
      StairSide side = classify(s, x);
      bool empty = box_is_empty(lat, x);
      if (side == StairSide::under) CHECK(empty);
      if (side == StairSide::above) CHECK_FALSE(empty);
      under += side == StairSide::under;
      above += side == StairSide::above;
    }
  }
  for (int it = 0; it < 3; ++it) {
    std::vector<IntPoint> b = random_basis(3, 2);
    auto lat = make_sym_lattice(b, std::max<std::int64_t>(10, std::abs(det3(b))));
    Staircase s = mv_sail(lat);
    for (int k = 0; k < 100; ++k) {
      std::vector<BigRat> x{BigRat(gen::uniform(0, 20), 2), BigRat(gen::uniform(0, 20), 2),
                            BigRat(gen::uniform(0, 20), 2)};
      StairSide side = classify(s, x);
      if (side == StairSide::under) CHECK(box_is_empty(lat, x));
      if (side == StairSide::above) CHECK_FALSE(box_is_empty(lat, x));
    }
  }
  CHECK(under > 50);
  CHECK(above > 50);
}

TEST_CASE("property: 2D minima give the best-approximation denominators") {
  for (long p = 2; p <= 60; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto mins = local_minima(make_sym_lattice({{1, p}, {0, q}}, p));
      std::set<long> got;
      for (const auto& m : mins)
        if (m[0] > 0) got.insert(m[0]);
      // Brute force: k improves on every smaller denominator.
      std::set<long> best;
      long record = q + 1;
      for (long k = 1; k <= q; ++k) {
        long r = (k * p) % q;
        long err = std::min(r, q - r);
        if (err < record) {
          best.insert(k);
          record = err;
        }
      }
      CHECK(got == best);
      std::set<long> conv;
      auto cf = expand(BigRat(p, q));
      for (const auto& [num, den] : convergent_pairs(cf, cf.length())) conv.insert(to_i64(den));
      CHECK(got == conv);
    }
}

TEST_CASE("property: doubling the window keeps the staircase inside the old window") {
  for (int it = 0; it < 10; ++it) {
    auto b = random_basis(2, 5);
    Staircase small = mv_sail(make_sym_lattice(b, 25));
    Staircase big = mv_sail(make_sym_lattice(b, 50));
    std::vector<IntPoint> m2, n2;
    for (const auto& m : big.minima)
      if (within(m, 25)) m2.push_back(m);
    for (const auto& n : big.nodes)
      if (within(n, 25)) n2.push_back(n);
    CHECK(m2 == small.minima);
    CHECK(n2 == small.nodes);
  }
}
