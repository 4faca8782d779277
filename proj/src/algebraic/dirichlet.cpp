#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/error.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

namespace {

IntMatrix unit_inverse(const IntMatrix& m) {
  // det = 1 for every unit handled here.
  return adjugate(m);
}

IntMatrix power(const IntMatrix& m, long k) {
  IntMatrix base = k < 0 ? unit_inverse(m) : m;
  IntMatrix r = IntMatrix::identity(m.rows());
  for (long e = std::labs(k); e > 0; --e) r = r * base;
  return r;
}

struct Unit {
  IntMatrix m;
  std::vector<double> log;  // log mu_i, ascending roots
  double norm() const {
    double s = 0;
    for (double v : log) s += v * v;
    return std::sqrt(s);
  }
};

std::vector<double> log_vector(const std::vector<FieldElem>& mu) {
  std::vector<double> l;
  for (const auto& m : mu) l.push_back(std::log(std::abs(m.approx())));
  return l;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Closed interval with MPFR endpoints.
class MpInterval {
 public:
  explicit MpInterval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  MpInterval(const MpInterval& o) : MpInterval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  MpInterval& operator=(const MpInterval&) = delete;
  ~MpInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  // log of a positive rational enclosure; false if the enclosure reaches 0.
  bool set_log(const RatInterval& x) {
    if (x.lo <= 0) return false;
    mpfr_set_q(lo_, x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(lo_, lo_, MPFR_RNDD);
    mpfr_log(hi_, hi_, MPFR_RNDU);
    return true;
  }

  friend MpInterval operator*(const MpInterval& a, const MpInterval& b) {
    MpInterval r(a.prec());
    mpfr_t t;
    mpfr_init2(t, a.prec());
    bool first = true;
    for (auto* x : {&a.lo_, &a.hi_})
      for (auto* y : {&b.lo_, &b.hi_}) {
        mpfr_mul(t, *x, *y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, *x, *y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  friend MpInterval operator-(const MpInterval& a, const MpInterval& b) {
    MpInterval r(a.prec());
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  bool excludes_zero() const { return mpfr_sgn(lo_) > 0 || mpfr_sgn(hi_) < 0; }

 private:
  mpfr_t lo_, hi_;
};

// Independence of the generators' log vectors at the given precision.
bool independent_at(const std::vector<std::vector<FieldElem>>& mus, int bits) {
  auto logs = [&](std::size_t g, std::size_t i, MpInterval& out) {
    return out.set_log(mus[g][i].enclose(bits));
  };
  if (mus.size() == 1) {
    MpInterval l(bits);
    return logs(0, mus[0].size() - 1, l) && l.excludes_zero();
  }
  MpInterval a(bits), b(bits), c(bits), d(bits);
  if (!logs(0, 0, a) || !logs(0, 1, b) || !logs(1, 0, c) || !logs(1, 1, d)) return false;
  return (a * d - b * c).excludes_zero();
}

// Coordinates of l in the basis (least squares in the log plane).
std::vector<double> solve_coords(const std::vector<Unit>& basis, const std::vector<double>& l) {
  if (basis.size() == 1) return {dot(basis[0].log, l) / dot(basis[0].log, basis[0].log)};
  double g11 = dot(basis[0].log, basis[0].log), g12 = dot(basis[0].log, basis[1].log),
         g22 = dot(basis[1].log, basis[1].log);
  double r1 = dot(basis[0].log, l), r2 = dot(basis[1].log, l);
  double dt = g11 * g22 - g12 * g12;
  return {(r1 * g22 - r2 * g12) / dt, (g11 * r2 - g12 * r1) / dt};
}

}  // namespace

DirichletGroup dirichlet_group(const IntMatrix& a, std::int64_t box) {
  AlgebraicCone cone = positive_cone(a);
  const std::size_t n = a.rows();
  const std::size_t rank = n - 1;
  std::vector<double> th;
  for (const auto& e : cone.eigenvalues) th.push_back(e.approx());
  IntMatrix a2 = a * a;
  auto combo = [&](const std::vector<long>& c) {
    BigInt x(c[0]), y(c[1]);
    IntMatrix m = x * IntMatrix::identity(n) + y * a;
    if (n == 3) m = m + BigInt(c[2]) * a2;
    return m;
  };

  // Coefficient slabs in parallel; each returns candidate coefficient lists.
  std::size_t side = static_cast<std::size_t>(2 * box + 1);
  auto slabs = parallel_map<std::vector<std::vector<long>>>(side, [&](std::size_t ix) {
    std::vector<std::vector<long>> found;
    long x = static_cast<long>(ix) - box;
    long zmax = n == 3 ? box : 0;
    for (long y = -box; y <= box; ++y)
      for (long z = -zmax; z <= zmax; ++z) {
        if (x == 1 && y == 0 && z == 0) continue;
        double prod = 1;
        bool pos = true;
        for (double t : th) {
          double mu = x + y * t + z * t * t;
          pos = pos && mu > 1e-12;
          prod *= mu;
        }
        if (!pos || std::abs(prod - 1) > 1e-6) continue;
        std::vector<long> c{x, y};
        if (n == 3) c.push_back(z);
        IntMatrix m = combo(c);
        if (det(m) != 1) continue;
        bool exact_pos = true;
        for (const auto& mu : unit_eigenvalues(cone, m)) exact_pos = exact_pos && mu.sign() > 0;
        if (exact_pos) found.push_back(c);
      }
    return found;
  });

  std::vector<Unit> pool;
  for (const auto& s : slabs)
    for (const auto& c : s) {
      IntMatrix m = combo(c);
      pool.push_back({m, log_vector(unit_eigenvalues(cone, m))});
    }
  DirichletGroup g;
  g.base = a;
  g.rank = rank;
  g.box = box;
  g.units_found = pool.size();
  auto not_found = [&] {
    fail("generators-not-found-in-box",
         "found " + std::to_string(pool.size()) + " totally positive units with coefficients within " +
             std::to_string(box) + ", need " + std::to_string(rank) + " independent ones",
         ErrorKind::resource_limit);
  };
  if (pool.empty()) not_found();

  auto by_norm = [](const Unit& u, const Unit& v) {
    if (u.norm() != v.norm()) return u.norm() < v.norm();
    return u.m < v.m;
  };
  std::vector<Unit> basis;
  for (int round = 0;; ++round) {
    if (round > 32) fail("inconclusive", "unit lattice reduction did not settle", ErrorKind::inconclusive);
    std::sort(pool.begin(), pool.end(), by_norm);
    basis = {pool[0]};
    if (rank == 2) {
      for (const auto& u : pool) {
        const auto& l0 = pool[0].log;
        double cr = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) cr = std::max(cr, std::abs(l0[i] * u.log[j] - l0[j] * u.log[i]));
        if (cr > 1e-6 * pool[0].norm() * u.norm()) {
          basis.push_back(u);
          break;
        }
      }
      if (basis.size() < 2) not_found();
    }
    // Every unit found must be an integer word in the basis.
    bool settled = true;
    for (const auto& u : pool) {
      auto k = solve_coords(basis, u.log);
      IntMatrix w = IntMatrix::identity(n);
      bool integral = true;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        long kb = std::lround(k[b]);
        integral = integral && std::abs(k[b] - static_cast<double>(kb)) < 1e-6;
        w = w * power(basis[b].m, kb);
      }
      if (integral) {
        if (w != u.m) fail("internal-unit-word", "unit is not the expected word in the basis", ErrorKind::internal);
        continue;
      }
      IntMatrix r = u.m * unit_inverse(w);
      pool.push_back({r, log_vector(unit_eigenvalues(cone, r))});
      settled = false;
      break;
    }
    if (settled) break;
  }

  // Gauss reduction of a rank-2 basis, then orientation.
  if (rank == 2) {
    for (;;) {
      if (basis[1].norm() < basis[0].norm()) std::swap(basis[0], basis[1]);
      double mu = dot(basis[0].log, basis[1].log) / dot(basis[0].log, basis[0].log);
      if (std::abs(mu) <= 0.5 + 1e-9) break;
      long k = std::lround(mu);
      IntMatrix r = basis[1].m * power(basis[0].m, -k);
      basis[1] = {r, log_vector(unit_eigenvalues(cone, r))};
    }
  }
  for (auto& b : basis)
    if (b.log.back() < 0) {
      IntMatrix r = unit_inverse(b.m);
      b = {r, log_vector(unit_eigenvalues(cone, r))};
    }

  std::vector<std::vector<FieldElem>> mus;
  for (const auto& b : basis) {
    g.generators.push_back(b.m);
    mus.push_back(unit_eigenvalues(cone, b.m));
    g.coefficients.push_back({});
  }
  // Coordinates in 1, A, A^2 via the cyclic vector e_1.
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<std::vector<BigInt>> kry;
    std::vector<BigInt> e(n, BigInt(0));
    e[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      kry.push_back(e);
      e = a.apply(e);
    }
    IntMatrix km = IntMatrix::from_columns(kry);
    BigInt dk = det(km);
    for (auto& x : adjugate(km).apply(basis[b].m.column(0))) {
      BigRat q = make_rat(x, dk);
      if (q.get_den() != 1) fail("internal-unit-word", "non-integral unit coordinates", ErrorKind::internal);
      g.coefficients[b].push_back(q.get_num());
    }
  }

  for (int bits : {64, 128})
    if (independent_at(mus, bits)) g.certified_bits.push_back(bits);
  g.independence_certified = g.certified_bits.size() == 2;
  if (!g.independence_certified)
    fail("inconclusive", "independence of the unit logarithms not certified at 64 and 128 bits",
         ErrorKind::inconclusive);
  return g;
}

}  // namespace sailkit
