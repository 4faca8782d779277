// Acceptance report: one PASS/FAIL line per criterion with the measured
// values and runtime. Arguments select criteria by number; none runs all.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "gen.hpp"
#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/contfrac/contfrac.hpp"
#include "sailkit/error.hpp"
#include "sailkit/intgeom/invariants.hpp"
#include "sailkit/jacobiperron/jacobiperron.hpp"
#include "sailkit/klein/klein.hpp"
#include "sailkit/minkvor/minkvor.hpp"
#include "sailkit/planar/angle.hpp"
#include "sailkit/stats/stats.hpp"

using namespace sailkit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

// Euclid on int64 with the final quotient split so the length is odd.
std::vector<long> odd_cf(long p, long q) {
  std::vector<long> a;
  while (q) {
    a.push_back(p / q);
    long r = p % q;
    p = q;
    q = r;
  }
  if (a.size() % 2 == 0) {
    if (a.back() == 1) {
      a.pop_back();
      a.back() += 1;
    } else {
      a.back() -= 1;
      a.push_back(1);
    }
  }
  return a;
}

std::vector<BigInt> big(const std::vector<long>& v) { return {v.begin(), v.end()}; }

IntAngle model(long q, long p) { return IntAngle{{0, 0}, IntPoint{1, 0}, IntPoint{q, p}}; }

void lls_cf(Outcome& o) {
  long n = 0;
  for (long p = 2; p <= 300; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++n;
      LLSSequence s = lls(model(q, p));
      o.require(s.finite() && s.head == big(odd_cf(p, q)), "p/q = " + std::to_string(p) + "/" + std::to_string(q));
    }
  o.detail << n << " fractions compared";
}

long iabs(long x) { return x < 0 ? -x : x; }

void trig(Outcome& o) {
  long n = 0;
  for (long p = 2; p <= 300; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++n;
      IntAngle a = model(q, p);
      RealAlgebraic t = itan(a);
      bool ok = t.is_rational() && t.rational_value() == make_rat(p, q) && isin(a) == p && icos(a) == BigRat(q);
      o.require(ok, "trigonometry of " + std::to_string(p) + "/" + std::to_string(q));
    }
  // Sine rule l(BC)/isin(A) = l(CA)/isin(B) = l(AB)/isin(C), cross-multiplied.
  int triangles = 0;
  while (triangles < 1000) {
    IntPoint A{gen::uniform(-50, 50), gen::uniform(-50, 50)};
    IntPoint B{gen::uniform(-50, 50), gen::uniform(-50, 50)};
    IntPoint C{gen::uniform(-50, 50), gen::uniform(-50, 50)};
    long area = iabs((B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0]));
    if (area == 0) continue;
    ++triangles;
    auto len = [](const IntPoint& u, const IntPoint& v) { return std::gcd(iabs(u[0] - v[0]), iabs(u[1] - v[1])); };
    BigInt sa = int_sine(A, B, C), sb = int_sine(B, C, A), sc = int_sine(C, A, B);
    long ab = len(A, B), bc = len(B, C), ca = len(C, A);
    bool ok = BigInt(bc) * sb == BigInt(ca) * sa && BigInt(ca) * sc == BigInt(ab) * sb &&
              BigInt(ab) * ca * sa == area && BigInt(bc) * ab * sb == area;
    o.require(ok, "sine rule");
  }
  o.detail << n << " model angles, " << triangles << " random triangles";
}

void klein_planar(Outcome& o) {
  long n = 0;
  for (long p = 1; p <= 100; ++p)
    for (long q = 1; q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++n;
      Sail s = klein_sail({{{1, 0}, {q, p}}});
      BrokenLine b = angle_sail(model(q, p));
      o.require(s.vertices == b.vertices && s.lattice_points == b.lattice_points,
                "cone (1,0),(" + std::to_string(q) + "," + std::to_string(p) + ")");
    }
  o.detail << n << " cones compared";
}

void gk_closed(Outcome& o) {
  double p1 = gk_probability(1), want = std::log2(4.0 / 3.0);
  o.require(std::fabs(p1 - want) < 1e-9, "gk_probability(1)");
  const long K = 1000000;
  TelescopingResult t = telescoping_check(K);
  double tail = 1.0 / (K + 1);
  o.require(t.residual < 2e-6, "telescoping residual");
  o.require(std::fabs(t.residual - t.closed_form) < 1e-12, "residual against ln((K+2)/(K+1))");
  o.require(std::fabs(t.residual - tail) < 1e-11, "residual against (K+1)^-1");
  for (long k = 1; k <= 1000; ++k) {
    ExtRat r = cross_ratio({BigRat(-1)}, {BigRat(0)}, {BigRat(k)}, {BigRat(k + 1)});
    o.require(!r.infinite && r.value == gk_ratio(k) && r.value == make_rat(BigInt(k + 1) * (k + 1), BigInt(k) * (k + 2)),
              "cross-ratio at k = " + std::to_string(k));
  }
  ExtRat unit = cross_ratio({BigRat(-1)}, {BigRat(0)}, {BigRat(1)}, ExtRat::inf());
  o.require(!unit.infinite && unit.value == 2, "[-1,0,1,inf] = 2");
  char buf[160];
  std::snprintf(buf, sizeof buf, "|p(1) - log2(4/3)| = %.2e, residual(1e6) = %.6e, (K+1)^-1 = %.6e", std::fabs(p1 - want),
                t.residual, tail);
  o.detail << buf;
}

void empirical(Outcome& o) {
  DigitHistogram h = empirical_digits(2000);
  o.detail << h.total << " digits;";
  for (long k = 1; k <= 5; ++k) {
    double dev = h.frequency(k) - gk_probability(k);
    char buf[64];
    std::snprintf(buf, sizeof buf, " k=%ld %+.4f", k, dev);
    o.detail << buf;
    o.require(std::fabs(dev) <= 0.02, "digit " + std::to_string(k));
  }
  o.detail << " (tolerance 0.02)";
}

// Classical (m, d, a) recurrence for sqrt(n).
ContinuedFraction sqrt_cf(long n) {
  long a0 = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (a0 * a0 > n) --a0;
  while ((a0 + 1) * (a0 + 1) <= n) ++a0;
  ContinuedFraction cf;
  cf.head.emplace_back(a0);
  long m = 0, d = 1, a = a0;
  do {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    cf.period.emplace_back(a);
  } while (a != 2 * a0);
  return cf;
}

void lagrange(Outcome& o) {
  int n = 0;
  for (long d = 2; d <= 200; ++d) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    if (r * r == d || (r + 1) * (r + 1) == d) continue;
    ++n;
    ContinuedFraction cf = expand_quadratic(RealAlgebraic::sqrt(BigRat(d)));
    o.require(cf.periodic() && cf == sqrt_cf(d), "sqrt(" + std::to_string(d) + ")");
  }
  auto s2 = expand_quadratic(RealAlgebraic::sqrt(BigRat(2)));
  auto s3 = expand_quadratic(RealAlgebraic::sqrt(BigRat(3)));
  o.require(s2.to_string() == "[1;(2)]" && s3.to_string() == "[1;(1,2)]", "sqrt 2 and sqrt 3");
  o.detail << n << " nonsquares; sqrt2 = " << s2.to_string() << ", sqrt3 = " << s3.to_string();
}

const IntMatrix kGolden{{2, 1}, {1, 1}};
const IntMatrix kCubic{{0, 0, -1}, {1, 0, 3}, {0, 1, 0}};  // companion of x^3 - 3x + 1

void invariance(Outcome& o) {
  DirichletGroup g2 = dirichlet_group(kGolden);
  std::size_t faces = 0, skipped = 0;
  for (const auto& cone : validate_matrix(kGolden)) {
    InvarianceReport r = check_invariance(cone, g2, kDefaultAlgebraicWindow2d);
    o.require(r.ok(), "golden matrix cone invariance");
    faces += r.faces_checked;
    skipped += r.faces_skipped;
  }
  AlgebraicCone golden = positive_cone(kGolden);
  auto period = sail_lls_period(golden, algebraic_sail(golden), g2.generators[0]);
  o.require(period == std::vector<BigInt>{1, 1}, "golden LLS period");
  o.detail << "2D: " << faces << " faces checked, " << skipped << " skipped, period (";
  for (std::size_t i = 0; i < period.size(); ++i) o.detail << (i ? "," : "") << period[i];
  o.detail << "); ";
  DirichletGroup g3 = dirichlet_group(kCubic);
  InvarianceReport r = check_invariance(positive_cone(kCubic), g3, kDefaultAlgebraicWindow3d);
  o.require(r.ok(), r.failures.empty() ? "no cubic face checked" : r.failures.front());
  o.detail << "cubic: " << g3.generators.size() << " generators, " << r.faces_checked << " faces and "
           << r.vertices_checked << " vertices checked, " << r.faces_skipped << " faces beyond twice the window";
}

bool same_classes(const std::vector<FaceClass>& a, const std::vector<FaceClass>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].type == b[i].type) || a[i].vertex_count != b[i].vertex_count || a[i].representative != b[i].representative)
      return false;
  return true;
}

void torus(Outcome& o) {
  AlgebraicCone cone = positive_cone(kCubic);
  DirichletGroup g = dirichlet_group(kCubic);
  TorusDecomposition a = fundamental_domain(cone, algebraic_sail(cone, 60), g);
  TorusDecomposition b = fundamental_domain(cone, algebraic_sail(cone, 80), g);
  o.require(a.euler() == 0 && b.euler() == 0, "Euler characteristic");
  o.require(same_classes(a.face_classes, b.face_classes), "face classes at windows 60 and 80");
  o.detail << "V,E,F = " << a.vertices << "," << a.edges << "," << a.faces << " at 60 and " << b.vertices << ","
           << b.edges << "," << b.faces << " at 80; classes:";
  for (const auto& c : a.face_classes) o.detail << " " << c.vertex_count << "-gon@" << c.type.distance;
}

void white(Outcome& o) {
  auto classes = enumerate_empty_simplices_3d(12);
  std::size_t unit = 0, bad = 0;
  for (const auto& c : classes) {
    unit += c.volume <= 1;
    IntSimplex s = c.simplex();
    bool ok = c.width == 1 && lattice_points(s).size() == 4 && lattice_width(s) == 1;
    bad += !ok;
    o.require(ok, "class " + c.normal_form.to_string());
  }
  o.require(unit == 1, "one class of volume 1");
  o.require(!classes.empty() && classes.back().volume == 12, "classes up to volume 12");
  o.detail << classes.size() << " classes up to volume 12, " << bad << " of width > 1, " << unit << " of volume 1";
}

std::vector<IntPoint> brute_minima(const SymLatticeWindow& lat) {
  std::vector<IntPoint> out;
  for (const auto& p : lat.points) {
    bool dominated = false;
    for (const auto& q : lat.points) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t i = 0; i < p.size(); ++i) le = le && q[i] <= p[i];
      dominated = dominated || le;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

void minkvor(Outcome& o) {
  Staircase z2 = mv_sail(make_sym_lattice({{1, 0}, {0, 1}}, 5));
  o.require(z2.minima == std::vector<IntPoint>{{0, 1}, {1, 0}} && z2.nodes == std::vector<IntPoint>{{1, 1}}, "Z^2");
  Staircase z3 = mv_sail(make_sym_lattice({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5));
  o.require(z3.minima == std::vector<IntPoint>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}} &&
                z3.nodes == std::vector<IntPoint>{{1, 1, 1}},
            "Z^3");
  int lattices = 0;
  while (lattices < 20) {
    std::vector<IntPoint> b{{gen::uniform(-6, 6), gen::uniform(-6, 6)}, {gen::uniform(-6, 6), gen::uniform(-6, 6)}};
    long d = iabs(b[0][0] * b[1][1] - b[0][1] * b[1][0]);
    if (d == 0) continue;
    ++lattices;
    // d e_i lies in the lattice, so a window of d reaches both axes.
    const long w = std::max(30L, d);
    auto small = make_sym_lattice(b, w), large = make_sym_lattice(b, 2 * w);
    o.require(local_minima(small) == brute_minima(small), "minima against brute force");
    Staircase s = mv_sail(small), l = mv_sail(large);
    auto inside = [w](const IntPoint& p) { return p[0] <= w && p[1] <= w; };
    std::vector<IntPoint> m2, n2;
    for (const auto& m : l.minima)
      if (inside(m)) m2.push_back(m);
    for (const auto& n : l.nodes)
      if (inside(n)) n2.push_back(n);
    o.require(m2 == s.minima && n2 == s.nodes, "window doubling");
  }
  o.detail << "Z^2, Z^3 trivial staircases; " << lattices << " random lattices at windows max(30, det) and twice that";
}

void markov(Outcome& o) {
  int pairs = 0;
  const long bound = 25;
  while (pairs < 10) {
    long a = gen::uniform(-5, 5), b = gen::uniform(-5, 5), c = gen::uniform(-5, 5), d = gen::uniform(-5, 5);
    if (a * d - b * c == 0) continue;
    ++pairs;
    MarkovResult r = markov_minimum_2d({BigRat(a), BigRat(b)}, {BigRat(c), BigRat(d)}, bound);
    long best = -1;
    for (long x = -bound; x <= bound; ++x)
      for (long y = -bound; y <= bound; ++y) {
        long v = iabs((a * x + b * y) * (c * x + d * y));
        if (v != 0 && (best < 0 || v < best)) best = v;
      }
    o.require(r.value == r.brute_value && r.value == RealAlgebraic(BigRat(best)), "form pair");
    o.detail << (pairs > 1 ? " " : "min: ") << best;
  }
}

void jacobi_perron(Outcome& o) {
  for (int i = 0; i < 100; ++i) {
    BigRat y = gen::rational(200, 200), z = gen::rational(200, 200);
    JPExpansion e = jp_expand(RealAlgebraic(y), RealAlgebraic(z), 10000);
    bool ok = e.verdict == JPVerdict::terminated && jp_reconstruct(e, e.digits.size()) == std::make_pair(y, z);
    o.require(ok, "rational pair " + to_string(y) + ", " + to_string(z));
  }
  auto f = NumberField::make(RealAlgebraic::real_roots(parse_poly("x^3-2")).at(0));
  FieldElem t = FieldElem::theta(f), one(f, BigRat(1));
  FieldElem y = t - one, z = t * t - one;
  JPExpansion a = jp_expand(y, z, 200), b = jp_expand(y, z, 2000);
  o.require(a.verdict == JPVerdict::periodic && b.verdict == a.verdict && b.preperiod == a.preperiod &&
                b.period == a.period,
            "pure cubic verdict");
  BigRat err = jp_error_bound(a, jp_reconstruct(a, 20));
  o.require(err < BigRat(1, 1000000000), "20-step error");
  char buf[96];
  std::snprintf(buf, sizeof buf, "error bound after 20 steps %.3e", err.get_d());
  o.detail << "100 rational pairs exact; cbrt2 data " << to_string(a.verdict) << " (preperiod " << a.preperiod
           << ", period " << a.period << ") at 200 and 2000 steps; " << buf;
}

void arnold(Outcome& o) {
  auto cubics = shipped_cubics();
  o.require(cubics.size() >= 3, "at least three shipped matrices");
  for (const auto& [name, m] : cubics) {
    AlgebraicCone cone = positive_cone(m);
    TorusDecomposition td = fundamental_domain(cone, algebraic_sail(cone), dirichlet_group(m));
    ArnoldReport r = arnold_probe(td);
    bool formed = r.applicable && r.triangles + r.quadrangles + r.other_polygons == td.face_classes.size() &&
                  r.has_triangle == (r.triangles > 0) && r.only_quadrangles == (r.quadrangles == td.face_classes.size()) &&
                  (r.has_distance_one || r.has_distance_gt_one) && !r.note.empty();
    o.require(formed, name);
    o.detail << name << ": triangle " << (r.has_triangle ? "yes" : "no") << ", distance 1 "
             << (r.has_distance_one ? "yes" : "no") << ", distance > 1 " << (r.has_distance_gt_one ? "yes" : "no")
             << "; ";
  }
}

struct Criterion {
  const char* title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"LLS equals the odd continued fraction", 30, lls_cf},
      {"integer trigonometry and sine rule", 30, trig},
      {"Klein sail and planar broken line agree", 60, klein_planar},
      {"Gauss-Kuzmin closed forms", 10, gk_closed},
      {"empirical digit frequencies", 120, empirical},
      {"Lagrange periodicity", 30, lagrange},
      {"algebraic sail invariance", 300, invariance},
      {"torus decomposition", 600, torus},
      {"empty simplices have width one", 600, white},
      {"Minkowski-Voronoi soundness", 60, minkvor},
      {"Markov minimum on sail vertices", 60, markov},
      {"Jacobi-Perron expansions", 60, jacobi_perron},
      {"Arnold probe report", 600, arnold},
  };
  std::vector<std::size_t> pick;
  for (int i = 1; i < argc; ++i) {
    long k = std::strtol(argv[i], nullptr, 10);
    if (k < 1 || k > static_cast<long>(all.size())) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 64;
    }
    pick.push_back(static_cast<std::size_t>(k - 1));
  }
  if (pick.empty())
    for (std::size_t i = 0; i < all.size(); ++i) pick.push_back(i);

  int failed = 0;
  for (auto i : pick) {
    const auto& c = all[i];
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.budget_s, "over the time budget");
    failed += !o.pass;
    char head[128];
    std::snprintf(head, sizeof head, "%s %2zu %s (%.1f s, budget %.0f s): ", o.pass ? "PASS" : "FAIL", i + 1, c.title,
                  secs, c.budget_s);
    std::cout << head << o.detail.str();
    if (!o.pass) std::cout << " [failed: " << o.first_failure << "]";
    std::cout << std::endl;
  }
  return failed;
}
