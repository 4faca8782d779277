#include "sailkit/exact/real_algebraic.hpp"

#include <algorithm>

#include "sailkit/error.hpp"
#include "sailkit/exact/number_field.hpp"

namespace sailkit {

namespace {

// Sign of sum c_i x^i for x = n/d, d > 0, evaluated without fractions.
int sign_int_poly(const std::vector<BigInt>& c, const BigRat& x) {
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  BigInt acc(0), dpow(1);
  // Horner on the homogenized form: acc = sum c_i n^i d^(deg - i).
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * n + c[k] * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

}  // namespace

RealAlgebraic::RealAlgebraic(const BigRat& r)
    : minpoly_{-r.get_num(), r.get_den()}, lo_(r), hi_(r) {}

BigRat RealAlgebraic::rational_value() const {
  if (!is_rational()) fail("not-rational", "value " + to_string() + " is irrational");
  return lo_;
}

RealAlgebraic RealAlgebraic::root_of(const Poly& p, const BigRat& lo, const BigRat& hi) {
  if (p.degree() < 1) fail("bad-polynomial", "constant polynomial has no isolated root");
  if (lo > hi) fail("bad-interval", "interval [" + sailkit::to_string(lo) + ", " + sailkit::to_string(hi) + "] is empty");
  int n = (lo == hi ? 0 : count_real_roots(p, lo, hi)) + (p.sign_at(lo) == 0 ? 1 : 0);
  if (n != 1)
    fail("not-isolating", "polynomial " + p.to_string() + " has " + std::to_string(n) + " roots in [" +
                              sailkit::to_string(lo) + ", " + sailkit::to_string(hi) + "]");
  Poly q = squarefree_part(p);
  for (const BigRat& r : rational_roots(q)) {
    if (lo <= r && r <= hi) return RealAlgebraic(r);
    q = q / Poly(std::vector<BigRat>{-r, BigRat(1)});
  }
  if (q.degree() > 3) fail("degree-too-high", "algebraic numbers of degree > 3 are not supported");
  return RealAlgebraic(q.primitive(), lo, hi);
}

std::vector<RealAlgebraic> RealAlgebraic::real_roots(const Poly& p) {
  std::vector<RealAlgebraic> out;
  for (const RatInterval& iv : isolate_real_roots(p)) out.push_back(root_of(p, iv.lo, iv.hi));
  return out;
}

RealAlgebraic RealAlgebraic::sqrt(const BigRat& r) {
  if (r <= 0) fail("bad-input", "sqrt needs a positive rational");
  Poly p(std::vector<BigRat>{-r, BigRat(0), BigRat(1)});
  return root_of(p, BigRat(0), std::max(BigRat(1), r));
}

void RealAlgebraic::bisect() {
  if (is_rational()) return;
  BigRat mid = (lo_ + hi_) / 2;
  if (sign_int_poly(minpoly_, mid) == sign_int_poly(minpoly_, lo_)) lo_ = mid;
  else hi_ = mid;
}

RealAlgebraic RealAlgebraic::refined(const BigRat& width) const {
  RealAlgebraic r = *this;
  while (r.hi_ - r.lo_ > width) r.bisect();
  return r;
}

double RealAlgebraic::approx() const {
  if (is_rational()) return lo_.get_d();
  BigRat scale = std::max(BigRat(1), BigRat(abs(lo_)));
  BigRat w = scale / BigRat(BigInt(1) << 64);
  RealAlgebraic r = refined(w);
  return BigRat((r.lo_ + r.hi_) / 2).get_d();
}

std::string RealAlgebraic::to_string() const {
  if (is_rational()) return sailkit::to_string(lo_);
  return "root of " + minpoly_poly().to_string() + " in [" + sailkit::to_string(lo_) + ", " +
         sailkit::to_string(hi_) + "]";
}

int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
  if (x.is_rational() && y.is_rational()) return cmp(x.lo(), y.lo()) < 0 ? -1 : (x.lo() == y.lo() ? 0 : 1);
  if (x.is_rational() || y.is_rational()) {
    bool flip = y.is_rational();
    const RealAlgebraic& r = flip ? y : x;
    const RealAlgebraic& a = flip ? x : y;
    const BigRat& v = r.lo();
    int res;
    if (v <= a.lo()) res = -1;
    else if (v >= a.hi()) res = 1;
    else res = sign_int_poly(a.minpoly(), v) == sign_int_poly(a.minpoly(), a.lo()) ? -1 : 1;
    return flip ? -res : res;
  }
  RealAlgebraic a = x, b = y;
  bool same = a.minpoly() == b.minpoly();
  for (;;) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    if (same) {
      BigRat lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
      if (count_real_roots(a.minpoly_poly(), lo, hi) == 1) return 0;
    }
    a.bisect();
    b.bisect();
  }
}

int sign(const RealAlgebraic& a) { return compare(a, RealAlgebraic(0)); }

BigInt floor(const RealAlgebraic& a) {
  if (a.is_rational()) return floor(a.lo());
  RealAlgebraic r = a.refined(BigRat(1, 2));
  BigInt k = floor(r.lo()) + 1;
  if (BigRat(k) >= r.hi()) return k - 1;
  // k lies strictly inside the interval and is not the root.
  bool root_above = sign_int_poly(r.minpoly(), BigRat(k)) == sign_int_poly(r.minpoly(), r.lo());
  return root_above ? k : k - 1;
}

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; }

RealAlgebraic arith(const RealAlgebraic& a, const RealAlgebraic& b, ArithOp op) {
  if (op == ArithOp::div && sign(b) == 0) fail("division-by-zero", "division by zero");
  if (a.is_rational() && b.is_rational()) {
    const BigRat& x = a.lo();
    const BigRat& y = b.lo();
    switch (op) {
      case ArithOp::add: return RealAlgebraic(BigRat(x + y));
      case ArithOp::sub: return RealAlgebraic(BigRat(x - y));
      case ArithOp::mul: return RealAlgebraic(BigRat(x * y));
      case ArithOp::div: return RealAlgebraic(BigRat(x / y));
    }
  }
  auto [fa, fb] = common_field(a, b);
  FieldElem r;
  switch (op) {
    case ArithOp::add: r = fa + fb; break;
    case ArithOp::sub: r = fa - fb; break;
    case ArithOp::mul: r = fa * fb; break;
    case ArithOp::div: r = fa / fb; break;
  }
  return r.to_real();
}

}  // namespace sailkit
