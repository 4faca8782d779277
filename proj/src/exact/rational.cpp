#include "sailkit/exact/rational.hpp"

#include <cctype>
#include <numeric>

#include "sailkit/error.hpp"

namespace sailkit {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail("division-by-zero", "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor(const BigRat& x) { return floor_div(x.get_num(), x.get_den()); }

BigInt ceil(const BigRat& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail("parse-error", "empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) fail("parse-error", "bad rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return make_rat(BigInt(num), BigInt(den));
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

bool fits_i64(const BigInt& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::int64_t to_i64(const BigInt& x) {
  if (!fits_i64(x)) fail("overflow", "integer " + x.get_str() + " exceeds 64 bits", ErrorKind::resource_limit);
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace sailkit
