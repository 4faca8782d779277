#include "sailkit/contfrac/contfrac.hpp"

#include <map>

#include "sailkit/error.hpp"
#include "sailkit/exact/number_field.hpp"

namespace sailkit {

const BigInt& ContinuedFraction::at(std::size_t i) const {
  if (i < head.size()) return head[i];
  if (period.empty()) fail("out-of-range", "index " + std::to_string(i) + " beyond a finite expansion");
  return period[(i - head.size()) % period.size()];
}

std::string ContinuedFraction::to_string() const {
  std::string s = "[";
  std::size_t n = 0;
  auto sep = [&] {
    if (n == 1) s += ";";
    else if (n > 1) s += ",";
  };
  for (const auto& a : head) {
    sep();
    s += a.get_str();
    ++n;
  }
  if (!period.empty()) {
    sep();
    s += "(";
    for (std::size_t i = 0; i < period.size(); ++i) s += (i ? "," : "") + period[i].get_str();
    s += ")";
  }
  return s + "]";
}

void validate(const ContinuedFraction& cf) {
  if (cf.head.empty() && cf.period.empty()) fail("bad-continued-fraction", "empty continued fraction");
  for (std::size_t i = 1; i < cf.head.size(); ++i)
    if (cf.head[i] < 1) fail("bad-continued-fraction", "partial quotients after a0 must be positive");
  for (const auto& a : cf.period)
    if (a < 1) fail("bad-continued-fraction", "period entries must be positive");
}

ContinuedFraction expand(const BigRat& r, Parity parity) {
  ContinuedFraction cf;
  BigInt p = r.get_num(), q = r.get_den();
  for (;;) {
    BigInt a = floor_div(p, q);
    cf.head.push_back(a);
    BigInt rem = p - a * q;
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  bool odd = cf.head.size() % 2 == 1;
  if ((parity == Parity::odd && !odd) || (parity == Parity::even && odd)) {
    BigInt& last = cf.head.back();
    if (cf.head.size() > 1 && last == 1) {
      cf.head.pop_back();
      cf.head.back() += 1;
    } else {
      last -= 1;
      cf.head.push_back(BigInt(1));
    }
  }
  return cf;
}

namespace {

// Product of [[a, 1], [1, 0]] over the given quotients: {{p, p'}, {q, q'}}.
struct Mobius {
  BigInt p = 1, pp = 0, q = 0, qq = 1;
  void push(const BigInt& a) {
    BigInt np = a * p + pp, nq = a * q + qq;
    pp = p;
    qq = q;
    p = np;
    q = nq;
  }
};

}  // namespace

BigRat evaluate_finite(const ContinuedFraction& cf) {
  validate(cf);
  if (cf.periodic()) fail("bad-continued-fraction", "periodic expansion has no rational value");
  Mobius m;
  for (const auto& a : cf.head) m.push(a);
  return make_rat(m.p, m.q);
}

RealAlgebraic evaluate(const ContinuedFraction& cf) {
  validate(cf);
  if (!cf.periodic()) return RealAlgebraic(evaluate_finite(cf));
  // y = [period; y] solves q y^2 + (q' - p) y - p' = 0 and is the positive root.
  Mobius per;
  for (const auto& a : cf.period) per.push(a);
  Poly fix(std::vector<BigRat>{BigRat(-per.pp), BigRat(per.qq - per.p), BigRat(per.q)});
  RealAlgebraic y;
  for (const auto& r : RealAlgebraic::real_roots(fix))
    if (sign(r) > 0) y = r;
  if (cf.head.empty()) return y;
  Mobius h;
  for (const auto& a : cf.head) h.push(a);
  auto f = NumberField::make(y);
  FieldElem t = FieldElem::theta(f);
  FieldElem num = FieldElem(f, BigRat(h.p)) * t + FieldElem(f, BigRat(h.pp));
  FieldElem den = FieldElem(f, BigRat(h.q)) * t + FieldElem(f, BigRat(h.qq));
  return (num / den).to_real();
}

ContinuedFraction expand_quadratic(const RealAlgebraic& a) {
  if (a.degree() != 2) fail("not-quadratic", a.to_string() + " is not a quadratic irrational");
  const auto& m = a.minpoly();  // m2 x^2 + m1 x + m0, m2 > 0
  BigInt d = m[1] * m[1] - 4 * m[2] * m[0];
  BigRat mid(-m[1], 2 * m[2]);
  mid.canonicalize();
  bool upper = compare(a, RealAlgebraic(mid)) > 0;
  // a = (P + sqrt(D)) / Q with Q | D - P^2.
  BigInt P = upper ? BigInt(-m[1]) : m[1];
  BigInt Q = upper ? BigInt(2 * m[2]) : BigInt(-2 * m[2]);
  BigInt r = sqrt(d);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> digits;
  for (;;) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      ContinuedFraction cf;
      cf.head.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
      cf.period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
      return cf;
    }
    seen.emplace(key, digits.size());
    BigInt q = Q > 0 ? floor_div(P + r, Q) : floor_div(-P - r - 1, -Q);
    digits.push_back(q);
    BigInt np = q * Q - P;
    BigInt nq = (d - np * np) / Q;
    P = np;
    Q = nq;
  }
}

std::vector<BigInt> expand_prefix(const RealAlgebraic& a, std::size_t n) {
  std::vector<BigInt> out;
  auto f = NumberField::make(a);
  FieldElem x = FieldElem::theta(f);
  while (out.size() < n) {
    BigInt d = x.floor();
    out.push_back(d);
    x = x - FieldElem(f, BigRat(d));
    if (x.is_zero()) break;
    x = x.inverse();
  }
  return out;
}

std::vector<std::pair<BigInt, BigInt>> convergent_pairs(const ContinuedFraction& cf, std::size_t k) {
  validate(cf);
  if (!cf.periodic() && k > cf.length())
    fail("out-of-range", "requested " + std::to_string(k) + " convergents of a length-" +
                             std::to_string(cf.length()) + " expansion");
  std::vector<std::pair<BigInt, BigInt>> out;
  Mobius m;
  for (std::size_t i = 0; i < k; ++i) {
    m.push(cf.at(i));
    out.emplace_back(m.p, m.q);
  }
  return out;
}

std::vector<BigRat> convergents(const ContinuedFraction& cf, std::size_t k) {
  std::vector<BigRat> out;
  for (const auto& [p, q] : convergent_pairs(cf, k)) out.push_back(make_rat(p, q));
  return out;
}

}  // namespace sailkit
