#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sailkit/exact/rational.hpp"

namespace sailkit {

struct RatInterval {
  BigRat lo;
  BigRat hi;
};

// Dense univariate polynomial over Q, coefficients in ascending order.
// The zero polynomial has degree -1 and an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  static Poly from_ints(const std::vector<BigInt>& coeffs);
  static Poly constant(const BigRat& c);
  static Poly monomial(const BigRat& c, int degree);
  static Poly x() { return monomial(BigRat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(int i) const;
  const BigRat& leading() const { return c_.back(); }

  BigRat eval(const BigRat& x) const;
  int sign_at(const BigRat& x) const { return sign(eval(x)); }
  // Interval enclosure of { p(t) : t in [lo, hi] } by interval Horner evaluation.
  RatInterval eval(const RatInterval& x) const;

  Poly derivative() const;
  Poly monic() const;
  Poly compose_neg() const;  // p(-x)

  // Integer polynomial with content 1 and positive leading coefficient.
  std::vector<BigInt> primitive() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigRat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0, 0) = 0

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly squarefree_part(const Poly& p);

// Number of distinct real roots in the half-open interval (a, b], a < b.
int count_real_roots(const Poly& p, const BigRat& a, const BigRat& b);

// Isolating intervals for the distinct real roots, ascending. Rational
// roots come back as degenerate intervals [r, r]; every other interval is
// open-isolating with non-root endpoints of opposite sign.
std::vector<RatInterval> isolate_real_roots(const Poly& p);

std::vector<BigRat> rational_roots(const Poly& p);

// Parses expressions such as "x^3-3x+1", "2*t^2 - 1/2", "-x". Any single
// letter may serve as the variable but it must be used consistently.
Poly parse_poly(std::string_view text);

}  // namespace sailkit
