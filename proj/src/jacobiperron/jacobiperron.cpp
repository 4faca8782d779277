#include "sailkit/jacobiperron/jacobiperron.hpp"

#include <map>

#include "sailkit/error.hpp"
#include "sailkit/exact/int_matrix.hpp"

namespace sailkit {

std::string to_string(JPVerdict v) {
  switch (v) {
    case JPVerdict::terminated: return "terminated";
    case JPVerdict::periodic: return "periodic";
    case JPVerdict::inconclusive: return "inconclusive";
  }
  return "";
}

namespace {

std::vector<BigRat> coeff_vector(const FieldElem& e) {
  std::vector<BigRat> c(static_cast<std::size_t>(e.field()->degree()), BigRat(0));
  for (std::size_t i = 0; i < e.poly().coeffs().size(); ++i) c[i] = e.poly().coeffs()[i];
  return c;
}

bool independent_over_q(const FieldElem& y, const FieldElem& z) {
  if (y.field()->degree() != 3) return false;
  auto cy = coeff_vector(y), cz = coeff_vector(z);
  // Rows: 1, y, z in the basis 1, t, t^2.
  BigRat d = cy[1] * cz[2] - cy[2] * cz[1];
  return d != 0;
}

}  // namespace

JPExpansion jp_expand(const FieldElem& y, const FieldElem& z, std::size_t max_steps) {
  if (y.field() != z.field()) fail("incompatible-fields", "y and z must lie in one number field");
  JPExpansion e;
  e.y = y;
  e.z = z;
  e.independent = independent_over_q(y, z);
  FieldPtr f = y.field();
  FieldElem one(f, BigRat(1));
  FieldElem a = y, b = z;
  std::map<std::pair<std::vector<BigRat>, std::vector<BigRat>>, std::size_t> seen;
  for (std::size_t k = 0; k <= max_steps; ++k) {
    auto key = std::make_pair(coeff_vector(a), coeff_vector(b));
    auto it = seen.find(key);
    if (it != seen.end()) {
      e.verdict = JPVerdict::periodic;
      e.preperiod = it->second;
      e.period = k - it->second;
      return e;
    }
    if (k == max_steps) break;
    seen.emplace(std::move(key), k);
    BigInt fa = a.floor(), fb = b.floor();
    e.digits.emplace_back(fa, fb);
    FieldElem ra = a - FieldElem(f, BigRat(fa));
    FieldElem rb = b - FieldElem(f, BigRat(fb));
    if (ra.is_zero()) {
      if (e.independent) fail("internal-jp", "zero remainder for an independent triple", ErrorKind::internal);
      e.verdict = JPVerdict::terminated;
      e.digits.pop_back();
      e.terminal_alpha = a;
      e.terminal_beta = b;
      return e;
    }
    FieldElem inv = ra.inverse();
    a = rb * inv;
    b = inv;
  }
  e.verdict = JPVerdict::inconclusive;
  return e;
}

JPExpansion jp_expand(const RealAlgebraic& y, const RealAlgebraic& z, std::size_t max_steps) {
  auto [fy, fz] = common_field(y, z);
  return jp_expand(fy, fz, max_steps);
}

std::pair<BigRat, BigRat> jp_reconstruct(const JPExpansion& e, std::size_t k) {
  bool term = e.verdict == JPVerdict::terminated;
  std::size_t avail = e.digits.size();
  if (e.verdict != JPVerdict::periodic && k > avail)
    fail("out-of-range", "requested " + std::to_string(k) + " digits, " + std::to_string(avail) + " available");
  auto digit = [&](std::size_t i) -> const std::pair<BigInt, BigInt>& {
    if (i < avail) return e.digits[i];
    return e.digits[e.preperiod + (i - e.preperiod) % e.period];
  };
  // v = P (0, 0, 1)^T with P = M(d_0) ... M(d_{k-1}); evaluated right to left.
  std::vector<BigInt> v{0, 0, 1};
  if (term && k == avail) {
    if (!e.terminal_beta.is_rational())
      fail("irrational-terminal-state", "the expansion stopped at an irrational state (dependent triple)");
    BigRat ta = e.terminal_alpha.rational_value(), tb = e.terminal_beta.rational_value();
    BigInt den = ta.get_den() * tb.get_den();
    v = {den, BigInt(ta * den), BigInt(tb * den)};
  } else if (k == 0) {
    return {BigRat(0), BigRat(0)};
  } else {
    // The last matrix applied to e3 gives (1, a, b).
    const auto& d = digit(k - 1);
    v = {BigInt(1), d.first, d.second};
    --k;
  }
  for (std::size_t i = k; i-- > 0;) {
    const auto& d = digit(i);
    v = {v[2], v[0] + d.first * v[2], v[1] + d.second * v[2]};
  }
  if (v[0] == 0) fail("out-of-range", "degenerate approximation");
  return {make_rat(v[1], v[0]), make_rat(v[2], v[0])};
}

BigRat jp_error_bound(const JPExpansion& e, const std::pair<BigRat, BigRat>& approx) {
  BigRat worst(0);
  for (const auto& [val, x] : {std::make_pair(e.y, approx.first), std::make_pair(e.z, approx.second)}) {
    RatInterval iv = val.enclose(160);
    BigRat d1 = abs(BigRat(x - iv.lo)), d2 = abs(BigRat(x - iv.hi));
    worst = std::max(worst, std::max(d1, d2));
  }
  return worst;
}

}  // namespace sailkit
