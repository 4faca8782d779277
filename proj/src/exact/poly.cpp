#include "sailkit/exact/poly.hpp"

#include <algorithm>
#include <cctype>

#include "sailkit/error.hpp"

namespace sailkit {

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::from_ints(const std::vector<BigInt>& coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, int degree) {
  std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRat(0);
  return c_[static_cast<std::size_t>(i)];
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

RatInterval mul(const RatInterval& a, const RatInterval& b) {
  BigRat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

RatInterval Poly::eval(const RatInterval& x) const {
  RatInterval acc{BigRat(0), BigRat(0)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigRat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  BigRat inv = 1 / leading();
  return inv * *this;
}

Poly Poly::compose_neg() const {
  std::vector<BigRat> c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

std::vector<BigInt> Poly::primitive() const {
  if (is_zero()) return {};
  BigInt l(1);
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> z;
  BigInt g(0);
  for (const auto& q : c_) {
    BigInt v = q.get_num() * (l / q.get_den());
    g = sailkit::gcd(g, v);
    z.push_back(v);
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

Poly Poly::operator-() const {
  std::vector<BigRat> c = c_;
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const BigRat& s, const Poly& p) {
  std::vector<BigRat> c = p.c_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
  std::vector<BigRat> r = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db) + 1);
  BigRat lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    BigRat f = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigRat a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1 && i > 0;
    if (!unit) out += sailkit::to_string(a);
    if (i > 0) {
      if (!unit && a.get_den() != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRat inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = gcd(p, p.derivative());
  return (p / g).monic();
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations(const std::vector<Poly>& chain, const BigRat& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Cauchy bound: every real root lies strictly inside (-B, B).
BigRat root_bound(const Poly& p) {
  BigRat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigRat(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

}  // namespace

int count_real_roots(const Poly& p, const BigRat& a, const BigRat& b) {
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(p);
  return variations(chain, a) - variations(chain, b);
}

std::vector<RatInterval> isolate_real_roots(const Poly& p) {
  std::vector<RatInterval> out;
  if (p.degree() <= 0) return out;
  Poly sq = squarefree_part(p);
  auto chain = sturm_chain(sq);
  auto count = [&](const BigRat& a, const BigRat& b) { return variations(chain, a) - variations(chain, b); };

  // Work list of (lo, hi) with non-root endpoints.
  BigRat bound = root_bound(sq);
  std::vector<RatInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RatInterval iv = work.back();
    work.pop_back();
    int n = count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    BigRat mid = (iv.lo + iv.hi) / 2;
    if (sq.sign_at(mid) != 0) {
      work.push_back({iv.lo, mid});
      work.push_back({mid, iv.hi});
      continue;
    }
    // Rational root at the split point; carve out a neighbourhood holding only it.
    out.push_back({mid, mid});
    BigRat eps = (iv.hi - iv.lo) / 4;
    while (sq.sign_at(mid - eps) == 0 || sq.sign_at(mid + eps) == 0 || count(mid - eps, mid + eps) != 1) eps /= 2;
    work.push_back({iv.lo, mid - eps});
    work.push_back({mid + eps, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) { return a.hi < b.hi; });
  return out;
}

std::vector<BigRat> rational_roots(const Poly& p) {
  std::vector<BigRat> roots;
  if (p.degree() <= 0) return roots;
  Poly sq = squarefree_part(p);
  std::vector<BigInt> z = sq.primitive();
  BigInt lead = abs(z.back());
  Poly zp = Poly::from_ints(z);
  for (RatInterval iv : isolate_real_roots(zp)) {
    if (iv.lo == iv.hi) {
      roots.push_back(iv.lo);
      continue;
    }
    // A rational root u/v in lowest terms has v | lead, so it is k/lead for an integer k.
    BigRat step(1, lead);
    step.canonicalize();
    int slo = zp.sign_at(iv.lo);
    while (iv.hi - iv.lo >= step) {
      BigRat mid = (iv.lo + iv.hi) / 2;
      int s = zp.sign_at(mid);
      if (s == 0) {
        iv.lo = iv.hi = mid;
        break;
      }
      if (s == slo) iv.lo = mid;
      else iv.hi = mid;
    }
    if (iv.lo == iv.hi) {
      roots.push_back(iv.lo);
      continue;
    }
    for (BigInt k = ceil(iv.lo * lead); BigRat(k, lead) <= iv.hi; ++k) {
      BigRat cand(k, lead);
      cand.canonicalize();
      if (zp.sign_at(cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail("parse-error", "empty polynomial");
  char var = 0;
  std::size_t i = 0;
  Poly result;
  auto bad = [&](const std::string& why) { fail("parse-error", "polynomial '" + s + "': " + why); };
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sgn = -1;
      ++i;
    } else if (i != 0) {
      bad("expected + or -");
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    BigRat coef(1);
    bool has_coef = i > start;
    if (has_coef) coef = parse_rat(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) bad("dangling '*'");
      ++i;
    }
    int deg = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (var == 0) var = s[i];
      else if (var != s[i]) bad("mixed variables");
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e0 == i) bad("missing exponent");
        deg = std::stoi(s.substr(e0, i - e0));
      }
    } else if (!has_coef) {
      bad("empty term");
    }
    result = result + Poly::monomial(BigRat(sgn) * coef, deg);
  }
  return result;
}

}  // namespace sailkit
