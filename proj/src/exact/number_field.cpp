#include "sailkit/exact/number_field.hpp"

#include "sailkit/error.hpp"
#include "sailkit/exact/lll.hpp"

namespace sailkit {

namespace {

BigRat pow2_inv(int bits) { return BigRat(BigInt(1), BigInt(1) << bits); }

void check_same(const FieldElem& a, const FieldElem& b) {
  if (!a.field() || !b.field()) fail("field-mismatch", "uninitialised field element", ErrorKind::internal);
  if (a.field() != b.field() && !(a.field()->modulus() == b.field()->modulus() &&
                                  a.field()->generator() == b.field()->generator()))
    fail("field-mismatch", "operands live in different number fields", ErrorKind::internal);
}

}  // namespace

NumberField::NumberField(const RealAlgebraic& generator)
    : generator_(generator),
      modulus_(generator.minpoly_poly().monic()),
      cached_(generator.refined(pow2_inv(kCachedBits)).interval()) {}

std::shared_ptr<const NumberField> NumberField::make(const RealAlgebraic& generator) {
  return std::shared_ptr<const NumberField>(new NumberField(generator));
}

RatInterval NumberField::theta_interval(int bits) const {
  if (bits <= kCachedBits) return cached_;
  return generator_.refined(pow2_inv(bits)).interval();
}

FieldElem::FieldElem(FieldPtr field, const BigRat& value) : field_(std::move(field)), p_(Poly::constant(value)) {}

FieldElem::FieldElem(FieldPtr field, const Poly& p) : field_(std::move(field)), p_(p % field_->modulus()) {}

FieldElem FieldElem::theta(FieldPtr field) { return FieldElem(field, Poly::x()); }

BigRat FieldElem::rational_value() const {
  if (!is_rational()) fail("not-rational", "field element " + to_string() + " is irrational");
  return p_.coeff(0);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail("division-by-zero", "inverse of zero");
  ExtGcd e = ext_gcd(p_, field_->modulus());
  return FieldElem(field_, e.s);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(a.field_, a.p_ + b.p_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(a.field_, a.p_ - b.p_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(a.field_, a.p_ * b.p_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return a * b.inverse();
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, -p_); }

RatInterval FieldElem::enclose(int bits) const {
  if (is_rational()) {
    BigRat v = p_.coeff(0);
    return {v, v};
  }
  return p_.eval(field_->theta_interval(bits));
}

int FieldElem::sign() const {
  if (is_rational()) return sailkit::sign(p_.coeff(0));
  for (int bits = NumberField::kCachedBits;; bits *= 2) {
    RatInterval iv = enclose(bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
}

BigInt FieldElem::floor() const {
  if (is_rational()) return sailkit::floor(p_.coeff(0));
  for (int bits = NumberField::kCachedBits;; bits *= 2) {
    RatInterval iv = enclose(bits);
    BigInt f = sailkit::floor(iv.lo);
    if (sailkit::floor(iv.hi) == f) return f;
  }
}

double FieldElem::approx() const {
  RatInterval iv = enclose();
  return BigRat((iv.lo + iv.hi) / 2).get_d();
}

RealAlgebraic FieldElem::to_real() const {
  if (is_rational()) return RealAlgebraic(p_.coeff(0));
  // Characteristic polynomial of multiplication by this element.
  int d = field_->degree();
  std::vector<std::vector<BigRat>> m(d, std::vector<BigRat>(d));
  Poly col = p_;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
    col = (col * Poly::x()) % field_->modulus();
  }
  std::vector<BigRat> cp;
  if (d == 2) {
    cp = {m[0][0] * m[1][1] - m[0][1] * m[1][0], -(m[0][0] + m[1][1]), BigRat(1)};
  } else {
    BigRat tr = m[0][0] + m[1][1] + m[2][2];
    BigRat minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                    m[1][1] * m[2][2] - m[1][2] * m[2][1];
    BigRat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    cp = {-det, minors, -tr, BigRat(1)};
  }
  Poly charpoly = Poly::from_ints(Poly(cp).primitive());
  for (int bits = NumberField::kCachedBits;; bits *= 2) {
    RatInterval iv = enclose(bits);
    if (charpoly.sign_at(iv.lo) == 0 || charpoly.sign_at(iv.hi) == 0) continue;
    if (count_real_roots(charpoly, iv.lo, iv.hi) == 1) return RealAlgebraic::root_of(charpoly, iv.lo, iv.hi);
  }
}

std::string FieldElem::to_string() const { return p_.to_string('t'); }

int compare(const FieldElem& a, const FieldElem& b) { return (a - b).sign(); }

std::optional<FieldElem> express_in(const FieldPtr& field, const RealAlgebraic& b) {
  if (b.is_rational()) return FieldElem(field, b.rational_value());
  int d = field->degree();
  if (b.degree() != d) return std::nullopt;
  if (b.minpoly() == field->generator().minpoly() && b == field->generator()) return FieldElem::theta(field);

  for (int bits : {64, 128, 256, 512}) {
    BigRat w = pow2_inv(bits + 16);
    RatInterval t = field->generator().refined(w).interval();
    RatInterval v = b.refined(w).interval();
    BigRat tm = (t.lo + t.hi) / 2, vm = (v.lo + v.hi) / 2;
    BigInt scale = BigInt(1) << bits;
    std::vector<BigRat> xs{vm, BigRat(1)};
    for (int i = 1; i < d; ++i) xs.push_back(xs.back() * tm);
    std::size_t n = xs.size();
    std::vector<std::vector<BigInt>> basis(n, std::vector<BigInt>(n + 1, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) {
      basis[i][i] = 1;
      basis[i][n] = floor(BigRat(xs[i] * scale + BigRat(1, 2)));
    }
    for (const auto& row : lll_reduce(basis)) {
      if (row[0] == 0) continue;
      std::vector<BigRat> c;
      for (std::size_t i = 1; i < n; ++i) c.push_back(BigRat(-row[i], row[0]));
      for (auto& x : c) x.canonicalize();
      FieldElem cand(field, Poly(c));
      if (cand.to_real() == b) return cand;
    }
  }
  return std::nullopt;
}

std::pair<FieldElem, FieldElem> common_field(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    auto f = NumberField::make(RealAlgebraic(0));
    return {FieldElem(f, a.rational_value()), FieldElem(f, b.rational_value())};
  }
  if (a.is_rational()) {
    auto f = NumberField::make(b);
    return {FieldElem(f, a.rational_value()), FieldElem::theta(f)};
  }
  auto f = NumberField::make(a);
  if (auto e = express_in(f, b)) return {FieldElem::theta(f), *e};
  fail("incompatible-fields", a.to_string() + " and " + b.to_string() + " do not share a field of degree <= 3");
}

}  // namespace sailkit
