#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sailkit/exact/poly.hpp"
#include "sailkit/exact/real_algebraic.hpp"

namespace sailkit {

// Q(theta) for a real algebraic theta of degree 1..3, embedded in R by the
// isolating interval of theta.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(const RealAlgebraic& generator);

  int degree() const { return generator_.degree(); }
  const Poly& modulus() const { return modulus_; }  // monic minimal polynomial
  const RealAlgebraic& generator() const { return generator_; }

  // Enclosure of theta of width <= 2^-bits. The default precision is cached.
  RatInterval theta_interval(int bits) const;
  static constexpr int kCachedBits = 96;

 private:
  explicit NumberField(const RealAlgebraic& generator);
  RealAlgebraic generator_;
  Poly modulus_;
  RatInterval cached_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a NumberField as a polynomial in theta of degree < deg.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, const BigRat& value);
  FieldElem(FieldPtr field, const Poly& p);  // reduced mod the modulus
  static FieldElem theta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_rational() const { return p_.degree() <= 0; }
  BigRat rational_value() const;

  FieldElem inverse() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Interval containing the real value; exact for rational elements.
  RatInterval enclose(int bits = NumberField::kCachedBits) const;
  int sign() const;
  BigInt floor() const;
  double approx() const;
  // Minimal polynomial plus isolating interval.
  RealAlgebraic to_real() const;
  std::string to_string() const;  // e.g. "1/2 + 3*t - t^2"

 private:
  FieldPtr field_;
  Poly p_;
};

int compare(const FieldElem& a, const FieldElem& b);

// Writes b as an element of Q(a) if possible (b rational, b == a, or a
// short integer relation between b and 1, a, a^2 that verifies exactly).
std::optional<FieldElem> express_in(const FieldPtr& field, const RealAlgebraic& b);

// Common field for a and b; throws incompatible-fields if none is found.
std::pair<FieldElem, FieldElem> common_field(const RealAlgebraic& a, const RealAlgebraic& b);

}  // namespace sailkit
