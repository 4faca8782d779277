#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "sailkit/error.hpp"
#include "sailkit/planar/angle.hpp"

using namespace sailkit;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

LLSSequence seq(std::initializer_list<long> head, std::initializer_list<long> period = {}) {
  return {ints(head), ints(period), false};
}

IntAngle model(long q, long p) { return IntAngle{{0, 0}, IntPoint{1, 0}, IntPoint{q, p}}; }

std::int64_t cross(const IntPoint& o, const IntPoint& a, const IntPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Points of the closed angle at the origin spanned by u and w (det(u, w) > 0).
bool in_angle(const IntPoint& u, const IntPoint& w, const IntPoint& p) {
  return cross({0, 0}, u, p) >= 0 && cross({0, 0}, p, w) >= 0;
}

// Supporting-line oracle: the chain is convex, its ends are the primitive
// ray points, and no lattice point of the angle (in a box) lies strictly on
// the vertex side of any edge.
void check_sail_oracle(const IntPoint& u, const IntPoint& w, const BrokenLine& line, long box) {
  const auto& v = line.vertices;
  REQUIRE(v.size() >= 2);
  auto prim = [](IntPoint p) {
    long g = std::gcd(std::abs(p[0]), std::abs(p[1]));
    return IntPoint{p[0] / g, p[1] / g};
  };
  CHECK(v.front() == prim(u));
  CHECK(v.back() == prim(w));
  long orient = cross({0, 0}, u, w) > 0 ? 1 : -1;
  IntPoint uu = orient > 0 ? u : w, ww = orient > 0 ? w : u;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) CHECK(orient * cross(v[i - 1], v[i], v[i + 1]) < 0);
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      IntPoint p{x, y};
      if ((x == 0 && y == 0) || !in_angle(uu, ww, p)) continue;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // Origin is strictly on one side; p must not be on that side.
        long so = cross(v[i], v[i + 1], {0, 0}), sp = cross(v[i], v[i + 1], p);
        CHECK_MESSAGE(!(sp != 0 && (sp > 0) == (so > 0)), "point " << x << "," << y);
      }
    }
}

IntPoint apply(const IntMatrix& u, const IntPoint& t, const IntPoint& p) {
  return {t[0] + u(0, 0).get_si() * p[0] + u(0, 1).get_si() * p[1],
          t[1] + u(1, 0).get_si() * p[0] + u(1, 1).get_si() * p[1]};
}

RealAlgebraic golden() { return RealAlgebraic::root_of(parse_poly("x^2-x-1"), 1, 2); }

}  // namespace

TEST_CASE("angle_sail examples") {
  BrokenLine l = angle_sail(model(5, 7));
  CHECK(l.vertices == std::vector<IntPoint>{{1, 0}, {1, 1}, {5, 7}});
  CHECK(l.lattice_points == std::vector<IntPoint>{{1, 0}, {1, 1}, {3, 4}, {5, 7}});
  check_sail_oracle({1, 0}, {5, 7}, l, 7);
  BrokenLine q = angle_sail(model(0, 1));
  CHECK(q.vertices == std::vector<IntPoint>{{1, 0}, {0, 1}});
  check_sail_oracle({1, 0}, {0, 1}, q, 7);
  CHECK(angle_sail(model(1, 1)).vertices == std::vector<IntPoint>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(angle_sail(model(2, 0)), Error);
  CHECK_THROWS_AS(angle_sail(IntAngle{{0, 0}, IntPoint{0, 0}, IntPoint{1, 1}}), Error);
}

TEST_CASE("lls examples") {
  CHECK(lls(model(5, 7)) == seq({1, 2, 2}));
  CHECK(lls(model(0, 1)) == seq({1}));
  CHECK(lls(IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{golden(), 1}}) == seq({}, {1}));
  CHECK(lls(model(3, 7)) == seq({2, 2, 1}));
  // Two irrational rays are not supported.
  try {
    lls(IntAngle{{0, 0}, SlopeRay{golden(), 1}, SlopeRay{golden(), -1}});
    FAIL("expected unsupported-angle");
  } catch (const Error& e) {
    CHECK(e.code() == "unsupported-angle");
  }
}

TEST_CASE("irrational sails inside a window") {
  IntAngle a{{0, 0}, IntPoint{1, 0}, SlopeRay{RealAlgebraic::sqrt(2), 1}};
  BrokenLine l = angle_sail(a, 100);
  CHECK_FALSE(l.complete);
  CHECK(l.vertices == std::vector<IntPoint>{{1, 0}, {1, 1}, {5, 7}, {29, 41}});
  CHECK(lls(a) == seq({1}, {2}));
  RealAlgebraic cbrt2 = RealAlgebraic::root_of(parse_poly("x^3-2"), 1, 2);
  LLSSequence c = lls(IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{cbrt2, 1}}, 1000);
  CHECK(c.truncated);
  auto cf = expand_prefix(cbrt2, c.head.size());
  for (std::size_t i = 0; i < c.head.size(); ++i) CHECK(c.head[i] == cf[i]);
  CHECK_THROWS_AS(isin(IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{cbrt2, 1}}), Error);
}

TEST_CASE("integer trigonometry examples") {
  CHECK(itan(model(5, 7)) == RealAlgebraic(BigRat(7, 5)));
  CHECK(isin(model(5, 7)) == 7);
  CHECK(icos(model(5, 7)) == 5);
  CHECK(itan(model(1, 1)) == RealAlgebraic(1));
  CHECK(isin(model(1, 1)) == 1);
  CHECK(icos(model(1, 1)) == 1);
  CHECK(itan(model(3, 7)) == RealAlgebraic(BigRat(7, 3)));
  CHECK(isin(model(3, 7)) == 7);
  CHECK(icos(model(3, 7)) == 3);
  CHECK(itan(IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{golden(), 1}}) == golden());
  try {
    isin(IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{golden(), 1}});
    FAIL("expected infinite-sine");
  } catch (const Error& e) {
    CHECK(e.code() == "infinite-sine");
  }
}

TEST_CASE("angle_from_lls examples") {
  auto a = angle_from_lls(seq({1, 2, 2}));
  CHECK(std::get<IntPoint>(a.ray2) == IntPoint{5, 7});
  CHECK(std::get<IntPoint>(angle_from_lls(seq({1})).ray2) == IntPoint{1, 1});
  CHECK(std::get<IntPoint>(angle_from_lls(seq({2, 3})).ray2) == IntPoint{3, 7});
  // Even-length input evaluates to the same angle as its odd rewrite.
  CHECK(lls(angle_from_lls(seq({2, 3}))) == seq({2, 2, 1}));
  CHECK(lls(angle_from_lls(seq({}, {1}))) == seq({}, {1}));
  CHECK_THROWS_AS(angle_from_lls(seq({1, 0, 2})), Error);
}

TEST_CASE("ikea_check_triangle examples") {
  auto r = ikea_check_triangle({seq({1}), seq({1}), seq({1})});
  CHECK(r.status == IkeaStatus::found);
  CHECK(r.witness == std::vector<IntPoint>{{0, 0}, {1, 0}, {0, 1}});
  auto r2 = ikea_check_triangle({seq({2}), seq({1}), seq({1})});
  CHECK((r2.status == IkeaStatus::found || r2.status == IkeaStatus::not_found_within_budget));
  if (r2.status == IkeaStatus::found) {
    const auto& w = r2.witness;
    std::vector<LLSSequence> got{lls(IntAngle{w[0], w[1], w[2]}), lls(IntAngle{w[1], w[2], w[0]}),
                                 lls(IntAngle{w[2], w[0], w[1]})};
    CHECK(std::count(got.begin(), got.end(), seq({2})) == 1);
  }
  try {
    ikea_check_triangle({seq({1}), seq({1})});
    FAIL("expected arity");
  } catch (const Error& e) {
    CHECK(e.code() == "arity");
  }
}

TEST_CASE("ikea search agrees with a direct recomputation") {
  // The triangle (0,0),(2,0),(0,3) has angle sequences that a search must find.
  IntPoint a{0, 0}, b{2, 0}, c{0, 3};
  std::vector<LLSSequence> s{lls(IntAngle{a, b, c}), lls(IntAngle{b, c, a}), lls(IntAngle{c, a, b})};
  auto r = ikea_check_triangle(s, 6);
  REQUIRE(r.status == IkeaStatus::found);
  const auto& w = r.witness;
  std::vector<LLSSequence> got{lls(IntAngle{w[0], w[1], w[2]}), lls(IntAngle{w[1], w[2], w[0]}),
                               lls(IntAngle{w[2], w[0], w[1]})};
  for (const auto& x : s) {
    bool present = false;
    for (const auto& y : got) present = present || y == x || y == reversed(x);
    CHECK(present);
  }
}

TEST_CASE("property: LLS equals the odd expansion for p/q <= 300") {
  for (long p = 2; p <= 300; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto odd = expand(BigRat(p, q), Parity::odd);
      CHECK(lls(model(q, p)).head == odd.head);
    }
}

TEST_CASE("property: duality isin = p, icos = q") {
  for (long p = 2; p <= 60; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(isin(model(q, p)) == p);
      CHECK(icos(model(q, p)) == q);
    }
}

TEST_CASE("property: lls is invariant under Aff(Z)") {
  for (int it = 0; it < 100; ++it) {
    IntPoint u{gen::uniform(-9, 9), gen::uniform(-9, 9)}, w{gen::uniform(-9, 9), gen::uniform(-9, 9)};
    if (u[0] * w[1] - u[1] * w[0] == 0) continue;
    IntMatrix m = gen::unimodular(2, 5);
    IntPoint t{gen::uniform(-20, 20), gen::uniform(-20, 20)};
    IntPoint o{0, 0};
    LLSSequence base = lls(IntAngle{o, u, w});
    LLSSequence img = lls(IntAngle{apply(m, t, o), apply(m, t, u), apply(m, t, w)});
    CHECK(base == img);
    CHECK(lls(IntAngle{o, w, u}) == reversed(base));
  }
}

TEST_CASE("property: sails pass the supporting-line oracle") {
  for (int it = 0; it < 60; ++it) {
    IntPoint u{gen::uniform(-7, 7), gen::uniform(-7, 7)}, w{gen::uniform(-7, 7), gen::uniform(-7, 7)};
    if (u[0] * w[1] - u[1] * w[0] == 0) continue;
    check_sail_oracle(u, w, angle_sail(IntAngle{{0, 0}, u, w}), 12);
  }
}
