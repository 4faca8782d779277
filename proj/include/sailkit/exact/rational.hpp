#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sailkit {

using BigInt = mpz_class;
using BigRat = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0

inline int sign(const BigInt& x) { return sgn(x); }
inline int sign(const BigRat& x) { return sgn(x); }

BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const BigRat& x);
BigInt ceil(const BigRat& x);

// "7/5", "-3", "0".
std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

// Accepts "p", "p/q" and "-p/q" with optional surrounding blanks.
BigRat parse_rat(std::string_view text);

std::int64_t to_i64(const BigInt& x);  // throws on overflow
bool fits_i64(const BigInt& x);

BigInt gcd(const BigInt& a, const BigInt& b);
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace sailkit
