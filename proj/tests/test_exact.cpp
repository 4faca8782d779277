#include "doctest.h"
#include "gen.hpp"
#include "sailkit/error.hpp"
#include "sailkit/exact/int_matrix.hpp"
#include "sailkit/exact/number_field.hpp"
#include "sailkit/exact/poly.hpp"
#include "sailkit/exact/real_algebraic.hpp"

using namespace sailkit;

namespace {

RealAlgebraic sqrt2() { return RealAlgebraic::root_of(parse_poly("x^2-2"), 1, 2); }
RealAlgebraic cubic_root_12() { return RealAlgebraic::root_of(parse_poly("x^3-3x+1"), 1, 2); }

}  // namespace

TEST_CASE("poly parsing and printing") {
  Poly p = parse_poly("x^3 - 3x + 1");
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - 3x + 1");
  CHECK(parse_poly("2*t^2 - 1/2").to_string('t') == "2t^2 - 1/2");
  CHECK_THROWS_AS(parse_poly("x^2 + y"), Error);
  CHECK_THROWS_AS(parse_poly(""), Error);
}

TEST_CASE("poly division and gcd") {
  Poly a = parse_poly("x^3-1"), b = parse_poly("x^2-1");
  auto [q, r] = Poly::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(gcd(a, b) == parse_poly("x-1"));
  ExtGcd e = ext_gcd(parse_poly("x^2+1"), parse_poly("x^3-3x+1"));
  CHECK(e.s * parse_poly("x^2+1") + e.t * parse_poly("x^3-3x+1") == Poly::constant(1));
}

TEST_CASE("root isolation") {
  auto roots = isolate_real_roots(parse_poly("x^3-3x+1"));
  REQUIRE(roots.size() == 3);
  for (const auto& iv : roots) CHECK(count_real_roots(parse_poly("x^3-3x+1"), iv.lo, iv.hi) == 1);
  auto rr = rational_roots(parse_poly("6x^3 - 5x^2 - 2x + 1"));  // (x-1)(3x-1)(2x+1)
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == BigRat(-1, 2));
  CHECK(rr[1] == BigRat(1, 3));
  CHECK(rr[2] == 1);
  CHECK(rational_roots(parse_poly("x^2-2")).empty());
}

TEST_CASE("ra_compare examples") {
  CHECK(compare(sqrt2(), RealAlgebraic(BigRat(3, 2))) < 0);
  CHECK(compare(sqrt2(), sqrt2()) == 0);
  CHECK(compare(cubic_root_12(), RealAlgebraic(1)) > 0);
  // Same value given by different isolating intervals.
  CHECK(compare(sqrt2(), RealAlgebraic::root_of(parse_poly("x^2-2"), BigRat(7, 5), BigRat(3, 2))) == 0);
  // Conjugates.
  CHECK(compare(RealAlgebraic::root_of(parse_poly("x^2-2"), -2, -1), sqrt2()) < 0);
}

TEST_CASE("ra_floor examples") {
  CHECK(floor(RealAlgebraic(BigRat(7, 5))) == 1);
  CHECK(floor(sqrt2()) == 1);
  CHECK(floor(RealAlgebraic::root_of(parse_poly("x^2-2"), -2, -1)) == -2);
  CHECK(floor(RealAlgebraic::sqrt(BigRat(10000))) == 100);
  CHECK(floor(RealAlgebraic::sqrt(BigRat(9999))) == 99);
}

TEST_CASE("ra_arith examples") {
  RealAlgebraic s = sqrt2() + sqrt2();
  CHECK(s.minpoly() == std::vector<BigInt>{-8, 0, 1});
  CHECK(compare(s, RealAlgebraic(BigRat(2))) > 0);
  CHECK(sqrt2() * sqrt2() == RealAlgebraic(2));
  CHECK((sqrt2() * sqrt2()).is_rational());
  RealAlgebraic t = cubic_root_12();
  CHECK(t / t == RealAlgebraic(1));
  CHECK_THROWS_AS(t / RealAlgebraic(0), Error);
  // Conjugate of sqrt2 lives in Q(sqrt2); sqrt3 does not.
  RealAlgebraic neg = RealAlgebraic::root_of(parse_poly("x^2-2"), -2, -1);
  CHECK((sqrt2() + neg) == RealAlgebraic(0));
  try {
    (void)(sqrt2() + RealAlgebraic::sqrt(3));
    FAIL("expected incompatible-fields");
  } catch (const Error& e) {
    CHECK(e.code() == "incompatible-fields");
  }
  // Another root of x^3-3x+1 is a polynomial in the first (cyclic cubic).
  RealAlgebraic other = RealAlgebraic::root_of(parse_poly("x^3-3x+1"), 0, 1);
  RealAlgebraic sum = t + other;
  CHECK(sum.degree() == 3);
}

TEST_CASE("number field element arithmetic") {
  auto f = NumberField::make(cubic_root_12());
  FieldElem t = FieldElem::theta(f);
  FieldElem one(f, BigRat(1));
  CHECK(t * t * t == FieldElem(f, Poly::constant(3) * Poly::x() - Poly::constant(1)));
  CHECK(t * t.inverse() == one);
  CHECK(t.floor() == 1);
  CHECK((-t).floor() == -2);
  CHECK(t.sign() == 1);
  RealAlgebraic r = (t * t).to_real();
  CHECK(r.degree() == 3);
  CHECK(compare(r, cubic_root_12() * cubic_root_12()) == 0);
}

TEST_CASE("hnf and snf examples") {
  SmithForm f = smith(IntMatrix{{2, 0}, {0, 3}});
  CHECK(f.diag == IntMatrix{{1, 0}, {0, 6}});
  CHECK(f.left * IntMatrix{{2, 0}, {0, 3}} * f.right == f.diag);
  CHECK(hnf_column(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(smith(IntMatrix::identity(2)).diag == IntMatrix::identity(2));
  CHECK(hnf_column(IntMatrix{{2, 3}, {0, 1}}) == IntMatrix{{1, 0}, {1, 2}});
  CHECK(sublattice_index(IntMatrix{{1, 0}, {0, 2}}) == 2);
  CHECK_THROWS_AS(sublattice_index(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("hnf is canonical under unimodular column operations") {
  for (int it = 0; it < 200; ++it) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = gen::uniform(-9, 9);
    if (det(m) == 0) continue;
    IntMatrix u = gen::unimodular(3);
    CHECK(hnf_column(m) == hnf_column(m * u));
    CHECK(hnf_row(m) == hnf_row(u * m));
  }
}

TEST_CASE("property: floor of embedded rationals") {
  for (int i = 0; i < 1000; ++i) {
    BigRat q = gen::rational(1000, 97);
    CHECK(floor(RealAlgebraic(q)) == floor(q));
  }
}

TEST_CASE("property: compare is a total order on mixed-degree values") {
  std::vector<RealAlgebraic> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(RealAlgebraic(gen::rational(20, 7)));
  for (int d : {2, 3, 5, 7, 10, 11}) {
    pool.push_back(RealAlgebraic::sqrt(BigRat(d)));
    pool.push_back(RealAlgebraic::sqrt(BigRat(d, 4)));
  }
  for (auto& r : RealAlgebraic::real_roots(parse_poly("x^3-3x+1"))) pool.push_back(r);
  for (auto& r : RealAlgebraic::real_roots(parse_poly("x^3-4x+1"))) pool.push_back(r);
  for (auto& r : RealAlgebraic::real_roots(parse_poly("2x^3-x^2-3x+1"))) pool.push_back(r);
  auto pick = [&]() -> const RealAlgebraic& { return pool[static_cast<std::size_t>(gen::uniform(0, static_cast<long>(pool.size()) - 1))]; };
  for (int i = 0; i < 1000; ++i) {
    const RealAlgebraic &a = pick(), &b = pick(), &c = pick();
    int ab = compare(a, b), ba = compare(b, a);
    CHECK(ab == -ba);
    CHECK((ab < 0) == (a.approx() < b.approx()));
    if (ab <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
  }
}

TEST_CASE("property: snf diagonal product equals |det|") {
  int done = 0;
  while (done < 1000) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = gen::uniform(-9, 9);
    BigInt d = det(m);
    if (d == 0) continue;
    ++done;
    SmithForm f = smith(m);
    auto diag = f.diagonal();
    REQUIRE(diag.size() == 3);
    BigInt prod(1);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(diag[i] >= 1);
      if (i + 1 < 3) CHECK(diag[i + 1] % diag[i] == 0);
      prod *= diag[i];
    }
    CHECK(prod == abs(d));
    CHECK(f.left * m * f.right == f.diag);
    CHECK(f.left * f.left_inverse == IntMatrix::identity(3));
  }
}

TEST_CASE("property: refinement drives the width below any bound") {
  RealAlgebraic t = cubic_root_12();
  for (int k = 1; k <= 200; k *= 3) {
    BigRat w(1, BigInt(1) << k);
    RealAlgebraic r = t.refined(w);
    CHECK(r.hi() - r.lo() <= w);
    CHECK(r == t);
  }
}

TEST_CASE("saturation") {
  IntMatrix cols = IntMatrix::from_columns({{2, 0, 0}, {0, 2, 2}});
  IntMatrix s = saturation(cols);
  CHECK(sublattice_index(s) == 1);
  CHECK(sublattice_index(cols) == 4);
}
