#pragma once

#include <string>
#include <vector>

#include "sailkit/exact/poly.hpp"
#include "sailkit/exact/rational.hpp"

namespace sailkit {

// Exact real number of degree <= 3: a primitive irreducible integer
// polynomial plus an isolating interval. Rationals carry a linear minpoly
// and lo == hi. Irrational values keep lo < hi with neither endpoint a root.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(BigRat(0)) {}
  RealAlgebraic(const BigRat& r);  // NOLINT: implicit on purpose
  RealAlgebraic(long v) : RealAlgebraic(BigRat(v)) {}

  // The unique root of p in [lo, hi]. p may be reducible; the minimal
  // polynomial of that root is extracted. Throws if [lo, hi] does not
  // isolate exactly one root or if the root has degree > 3.
  static RealAlgebraic root_of(const Poly& p, const BigRat& lo, const BigRat& hi);
  // All distinct real roots of p, ascending.
  static std::vector<RealAlgebraic> real_roots(const Poly& p);
  // sqrt(r) for r > 0.
  static RealAlgebraic sqrt(const BigRat& r);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  BigRat rational_value() const;  // throws unless is_rational()

  const std::vector<BigInt>& minpoly() const { return minpoly_; }
  Poly minpoly_poly() const { return Poly::from_ints(minpoly_); }
  const BigRat& lo() const { return lo_; }
  const BigRat& hi() const { return hi_; }
  RatInterval interval() const { return {lo_, hi_}; }

  // Copy whose interval width is <= width (width > 0).
  RealAlgebraic refined(const BigRat& width) const;
  // Halves the interval once; no-op for rationals.
  void bisect();

  double approx() const;
  std::string to_string() const;

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b);

 private:
  RealAlgebraic(std::vector<BigInt> minpoly, BigRat lo, BigRat hi)
      : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  std::vector<BigInt> minpoly_;
  BigRat lo_, hi_;
};

// -1, 0 or 1.
int compare(const RealAlgebraic& a, const RealAlgebraic& b);
int sign(const RealAlgebraic& a);
BigInt floor(const RealAlgebraic& a);

enum class ArithOp { add, sub, mul, div };
RealAlgebraic arith(const RealAlgebraic& a, const RealAlgebraic& b, ArithOp op);

inline RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) { return arith(a, b, ArithOp::add); }
inline RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return arith(a, b, ArithOp::sub); }
inline RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) { return arith(a, b, ArithOp::mul); }
inline RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) { return arith(a, b, ArithOp::div); }

}  // namespace sailkit
