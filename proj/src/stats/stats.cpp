#include "sailkit/stats/stats.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sailkit/error.hpp"
#include "sailkit/klein/klein.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

BigRat gk_ratio(long k) {
  if (k < 1) fail("bad-digit", "digit must be positive");
  BigInt kk(k);
  return make_rat((kk + 1) * (kk + 1), kk * (kk + 2));
}

namespace {

// log2(1 + 1/(k(k+2))) into r.
void gk_mpfr(mpfr_t r, long k) {
  if (k < 1) fail("bad-digit", "digit must be positive");
  mpfr_prec_t prec = mpfr_get_prec(r);
  mpfr_t t, l2;
  mpfr_init2(t, prec + 32);
  mpfr_init2(l2, prec + 32);
  BigInt den = BigInt(k) * (k + 2);
  mpfr_set_z(t, den.get_mpz_t(), MPFR_RNDN);
  mpfr_ui_div(t, 1, t, MPFR_RNDN);
  mpfr_log1p(t, t, MPFR_RNDN);
  mpfr_const_log2(l2, MPFR_RNDN);
  mpfr_div(r, t, l2, MPFR_RNDN);
  mpfr_clear(t);
  mpfr_clear(l2);
}

}  // namespace

double gk_probability(long k) {
  mpfr_t r;
  mpfr_init2(r, 128);
  gk_mpfr(r, k);
  double d = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  return d;
}

std::string gk_probability_decimal(long k, int digits) {
  if (digits < 1 || digits > 1000) fail("bad-digits", "digit count must be in [1, 1000]");
  mpfr_t r;
  mpfr_init2(r, static_cast<mpfr_prec_t>(digits * 3.33) + 16);
  gk_mpfr(r, k);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, r);
  mpfr_clear(r);
  return buf.data();
}

std::string ExtRat::to_string() const { return infinite ? "inf" : sailkit::to_string(value); }

ExtRat parse_ext_rat(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t == "inf" || t == "oo" || t == "infinity") return ExtRat::inf();
  return {parse_rat(t), false};
}

namespace {

// a t + b, the difference of two points with t -> infinity for infinite ones.
struct Lin {
  BigRat a, b;
};

Lin diff(const ExtRat& x, const ExtRat& y) {
  if (x.infinite && y.infinite) return {BigRat(0), BigRat(0)};
  if (x.infinite) return {BigRat(1), BigRat(-y.value)};
  if (y.infinite) return {BigRat(-1), x.value};
  return {BigRat(0), BigRat(x.value - y.value)};
}

// Coefficients of the product, ascending in t.
std::vector<BigRat> mul(const Lin& p, const Lin& q) {
  return {BigRat(p.b * q.b), BigRat(p.a * q.b + p.b * q.a), BigRat(p.a * q.a)};
}

int degree(const std::vector<BigRat>& c) {
  for (int i = 2; i >= 0; --i)
    if (c[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

}  // namespace

ExtRat cross_ratio(const ExtRat& a, const ExtRat& b, const ExtRat& c, const ExtRat& d) {
  std::vector<ExtRat> pts{a, b, c, d}, distinct;
  for (const auto& p : pts)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  if (distinct.size() < 3) fail("undefined-cross-ratio", "at least three of the four points must be distinct");
  auto num = mul(diff(c, a), diff(d, b));
  auto den = mul(diff(c, b), diff(d, a));
  int dn = degree(num), dd = degree(den);
  if (dn < 0 && dd < 0) fail("undefined-cross-ratio", "0/0");
  if (dd < 0 || dn > dd) return ExtRat::inf();
  if (dn < 0 || dn < dd) return {BigRat(0), false};
  return {BigRat(num[static_cast<std::size_t>(dn)] / den[static_cast<std::size_t>(dd)]), false};
}

TelescopingResult telescoping_check(long K) {
  if (K < 1) fail("bad-k", "K must be positive");
  // Kahan summation of log1p(1/(k(k+2))).
  double sum = 0, comp = 0;
  for (long k = 1; k <= K; ++k) {
    double kd = static_cast<double>(k);
    double term = std::log1p(1.0 / (kd * (kd + 2))) - comp;
    double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  TelescopingResult r;
  r.partial_sum = sum;
  r.residual = std::abs(sum - std::log(2.0));
  r.closed_form = std::log1p(1.0 / (static_cast<double>(K) + 1));
  return r;
}

double DigitHistogram::frequency(long k) const {
  if (total == 0) return 0;
  if (k < 1 || k > kDigitBuckets) fail("out-of-range", "digit outside the histogram");
  return static_cast<double>(counts[static_cast<std::size_t>(k)]) / static_cast<double>(total);
}

DigitHistogram empirical_digits(long q_max) {
  if (q_max < 2) fail("bad-qmax", "q_max must be at least 2");
  if (q_max > kEmpiricalCap)
    fail("resource-limit", "q_max above " + std::to_string(kEmpiricalCap), ErrorKind::resource_limit);
  std::size_t nq = static_cast<std::size_t>(q_max - 1);
  auto parts = parallel_map<std::vector<std::uint64_t>>(nq, [&](std::size_t i) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(kDigitBuckets) + 2, 0);
    long q = static_cast<long>(i) + 2;
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      // p/q = [0; a1, a2, ...].
      long num = q, den = p;
      while (den != 0) {
        long a = num / den, r = num % den;
        ++c[static_cast<std::size_t>(std::min(a, kDigitBuckets + 1))];
        num = den;
        den = r;
      }
    }
    return c;
  });
  DigitHistogram h;
  h.counts.assign(static_cast<std::size_t>(kDigitBuckets) + 1, 0);
  for (const auto& c : parts) {
    for (long k = 1; k <= kDigitBuckets; ++k) h.counts[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k)];
    h.overflow += c[static_cast<std::size_t>(kDigitBuckets) + 1];
  }
  for (auto v : h.counts) h.total += v;
  h.total += h.overflow;
  h.source = "reduced p/q, 1 <= p < q <= " + std::to_string(q_max);
  return h;
}

FaceCensus face_census(int dim, long gen_bound, std::size_t samples, std::uint64_t seed) {
  if (dim != 2 && dim != 3) fail("bad-dimension", "census dimension must be 2 or 3");
  if (gen_bound < 1 || gen_bound > 12) fail("bad-bound", "generator bound must be in [1, 12]");
  if (samples > 100000) fail("resource-limit", "at most 100000 samples", ErrorKind::resource_limit);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-gen_bound, gen_bound);
  std::vector<ConeSpec> cones(samples);
  for (auto& c : cones)
    for (int g = 0; g < dim; ++g) {
      IntPoint v(static_cast<std::size_t>(dim));
      for (auto& x : v) x = dist(rng);
      c.generators.push_back(v);
    }
  auto sails = parallel_map<std::vector<std::pair<FaceType, std::size_t>>>(samples, [&](std::size_t i) {
    std::vector<std::pair<FaceType, std::size_t>> out;
    IntMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = cones[i].generators[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    if (det(m) == 0) return out;
    Sail s = klein_sail(cones[i]);
    for (const auto& f : s.faces) out.push_back({FaceType{f.normal_form, f.distance}, f.vertices.size()});
    return out;
  });
  FaceCensus fc;
  fc.dim = dim;
  fc.gen_bound = gen_bound;
  fc.samples = samples;
  fc.seed = seed;
  std::map<std::pair<IntMatrix, std::size_t>, CensusEntry> tally;
  for (const auto& s : sails) {
    if (s.empty()) {
      ++fc.skipped;
      continue;
    }
    ++fc.cones;
    for (const auto& [t, nv] : s) {
      auto& e = tally[{t.form, nv}];
      e.normal_form = t.form;
      e.vertex_count = nv;
      ++fc.faces;
      if (t.distance == 1) {
        ++e.distance_one;
        ++fc.faces_distance_one;
      } else {
        ++e.distance_more;
      }
    }
  }
  for (auto& [k, e] : tally) fc.entries.push_back(e);
  return fc;
}

}  // namespace sailkit
