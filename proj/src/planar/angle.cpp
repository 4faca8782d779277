#include "sailkit/planar/angle.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "sailkit/error.hpp"
#include "sailkit/exact/number_field.hpp"
#include "sailkit/util/parallel.hpp"

namespace sailkit {

std::string LLSSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < head.size(); ++i) s += (i ? "," : "") + head[i].get_str();
  if (!period.empty()) {
    s += head.empty() ? "(" : ",(";
    for (std::size_t i = 0; i < period.size(); ++i) s += (i ? "," : "") + period[i].get_str();
    s += ")";
  }
  if (truncated) s += ",...";
  return s + ")";
}

LLSSequence reversed(const LLSSequence& s) {
  if (!s.finite()) fail("infinite-sequence", "only finite sequences can be reversed");
  LLSSequence r = s;
  std::reverse(r.head.begin(), r.head.end());
  return r;
}

namespace {

// The angle moved by an integer affine map T (det +-1) so that ray1 is the
// positive x-axis and ray2 points along (mx, my) with my >= mx > 0.
struct Model {
  IntPoint vertex;
  IntMatrix tinv;  // model -> original (linear part)
  bool rational = true;
  BigInt mx, my;   // primitive model direction of ray2 (rational case)
  FieldElem alpha;  // my / mx (irrational case)
};

IntPoint point_of(const RayDir& r) { return std::get<IntPoint>(r); }

// Slope rays with rational slope carry a lattice point; make it explicit.
RayDir normalise(const IntPoint& v, const RayDir& r) {
  if (auto* s = std::get_if<SlopeRay>(&r)) {
    if (s->sign != 1 && s->sign != -1) fail("degenerate-angle", "slope ray sign must be +1 or -1");
    if (s->slope.is_rational()) {
      BigRat q = s->slope.rational_value();
      return IntPoint{v[0] + s->sign * to_i64(q.get_den()), v[1] + s->sign * to_i64(q.get_num())};
    }
  } else {
    const auto& p = std::get<IntPoint>(r);
    if (p.size() != 2) fail("bad-dimension", "planar angles live in Z^2");
  }
  return r;
}

Model build_model(const IntAngle& angle) {
  if (angle.vertex.size() != 2) fail("bad-dimension", "planar angles live in Z^2");
  RayDir r1 = normalise(angle.vertex, angle.ray1), r2 = normalise(angle.vertex, angle.ray2);
  if (std::holds_alternative<SlopeRay>(r1)) {
    if (std::holds_alternative<SlopeRay>(r2))
      fail("unsupported-angle", "at least one ray must carry an integer point");
    std::swap(r1, r2);
  }
  Model m;
  m.vertex = angle.vertex;
  auto d1 = diff(point_of(r1), angle.vertex);
  if (d1[0] == 0 && d1[1] == 0) fail("degenerate-angle", "ray point coincides with the vertex");
  BigInt g = gcd(d1[0], d1[1]);
  BigInt a = d1[0] / g, b = d1[1] / g, s, t, gg;
  mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  IntMatrix u = IntMatrix::from_rows({{s, t}, {BigInt(-b), a}});  // u * (a, b) = (1, 0)

  IntMatrix tmat;
  if (std::holds_alternative<IntPoint>(r2)) {
    auto w = u.apply(diff(point_of(r2), angle.vertex));
    if (w[1] == 0) fail("degenerate-angle", "rays are collinear");
    IntMatrix refl = IntMatrix::identity(2);
    if (w[1] < 0) refl(1, 1) = -1, w[1] = -w[1];
    BigInt k = 1 - ceil(BigRat(w[0], w[1]));
    IntMatrix shear = IntMatrix::from_rows({{BigInt(1), k}, {BigInt(0), BigInt(1)}});
    tmat = shear * refl * u;
    BigInt mx = w[0] + k * w[1], my = w[1];
    BigInt c = gcd(mx, my);
    m.mx = mx / c;
    m.my = my / c;
  } else {
    const auto& sr = std::get<SlopeRay>(r2);
    auto f = NumberField::make(sr.slope);
    FieldElem al = FieldElem::theta(f);
    FieldElem sg(f, BigRat(sr.sign));
    FieldElem w0 = sg * (FieldElem(f, BigRat(u(0, 0))) + FieldElem(f, BigRat(u(0, 1))) * al);
    FieldElem w1 = sg * (FieldElem(f, BigRat(u(1, 0))) + FieldElem(f, BigRat(u(1, 1))) * al);
    IntMatrix refl = IntMatrix::identity(2);
    if (w1.sign() < 0) refl(1, 1) = -1, w1 = -w1;
    FieldElem ratio = w0 / w1;
    BigInt k = 1 + (-ratio).floor();  // 1 - ceil(ratio)
    IntMatrix shear = IntMatrix::from_rows({{BigInt(1), k}, {BigInt(0), BigInt(1)}});
    tmat = shear * refl * u;
    m.rational = false;
    m.alpha = w1 / (w0 + FieldElem(f, BigRat(k)) * w1);
  }
  BigInt d = det(tmat);
  m.tinv = d * adjugate(tmat);
  return m;
}

IntPoint to_original(const Model& m, const BigInt& x, const BigInt& y) {
  auto v = m.tinv.apply({x, y});
  return {m.vertex[0] + to_i64(v[0]), m.vertex[1] + to_i64(v[1])};
}

// Partial quotients of the model slope, one at a time.
std::function<std::optional<BigInt>()> quotient_stream(const Model& m) {
  if (m.rational) {
    auto cf = std::make_shared<ContinuedFraction>(expand(make_rat(m.my, m.mx), Parity::odd));
    auto i = std::make_shared<std::size_t>(0);
    return [cf, i]() -> std::optional<BigInt> {
      if (*i >= cf->length()) return std::nullopt;
      return cf->head[(*i)++];
    };
  }
  RealAlgebraic a = m.alpha.to_real();
  if (a.degree() == 2) {
    auto cf = std::make_shared<ContinuedFraction>(expand_quadratic(a));
    auto i = std::make_shared<std::size_t>(0);
    return [cf, i]() -> std::optional<BigInt> { return cf->at((*i)++); };
  }
  auto x = std::make_shared<FieldElem>(m.alpha);
  return [x]() -> std::optional<BigInt> {
    BigInt d = x->floor();
    *x = (*x - FieldElem(x->field(), BigRat(d))).inverse();
    return d;
  };
}

std::int64_t max_norm(const IntPoint& p, const IntPoint& v) {
  return std::max(std::abs(p[0] - v[0]), std::abs(p[1] - v[1]));
}

BrokenLine sail_of_model(const Model& m, std::int64_t window) {
  BrokenLine line;
  line.vertices.push_back(to_original(m, BigInt(1), BigInt(0)));
  auto next = quotient_stream(m);
  // Vertices beyond A0 are the even convergents (q_2k, p_2k).
  BigInt p = 1, pp = 0, q = 0, qq = 1;
  for (std::size_t i = 0;; ++i) {
    auto a = next();
    if (!a) break;
    BigInt np = *a * p + pp, nq = *a * q + qq;
    pp = p, qq = q, p = np, q = nq;
    if (i % 2) continue;
    if (!m.rational && (abs(p) > window || abs(q) > window)) {
      // Cheap pre-check in model coordinates before mapping back.
      if (!fits_i64(p) || !fits_i64(q)) {
        line.complete = false;
        break;
      }
    }
    IntPoint v = to_original(m, q, p);
    if (!m.rational && max_norm(v, m.vertex) > window) {
      line.complete = false;
      break;
    }
    line.vertices.push_back(v);
  }
  for (std::size_t i = 0; i + 1 < line.vertices.size(); ++i) {
    const IntPoint &a = line.vertices[i], &b = line.vertices[i + 1];
    std::int64_t g = to_i64(int_length(a, b));
    std::int64_t dx = (b[0] - a[0]) / g, dy = (b[1] - a[1]) / g;
    for (std::int64_t k = 0; k < g; ++k) line.lattice_points.push_back({a[0] + k * dx, a[1] + k * dy});
  }
  line.lattice_points.push_back(line.vertices.back());
  return line;
}

}  // namespace

BrokenLine angle_sail(const IntAngle& angle, std::int64_t window) {
  if (window < 1) fail("bad-input", "window must be positive");
  return sail_of_model(build_model(angle), window);
}

LLSSequence lls_of_broken_line(const std::vector<IntPoint>& v) {
  if (v.size() < 2) fail("degenerate-angle", "a broken line needs two vertices");
  LLSSequence s;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (i > 0) s.head.push_back(int_sine(v[i], v[i - 1], v[i + 1]));
    s.head.push_back(int_length(v[i], v[i + 1]));
  }
  return s;
}

LLSSequence lls(const IntAngle& angle, std::int64_t window) {
  Model m = build_model(angle);
  if (m.rational) return lls_of_broken_line(sail_of_model(m, window).vertices);
  RealAlgebraic a = m.alpha.to_real();
  if (a.degree() == 2) {
    auto cf = expand_quadratic(a);
    return LLSSequence{cf.head, cf.period, false};
  }
  BrokenLine line = sail_of_model(m, window);
  if (line.vertices.size() < 2) fail("window-too-small", "no sail edge inside the window");
  LLSSequence s = lls_of_broken_line(line.vertices);
  s.truncated = true;
  return s;
}

RealAlgebraic itan(const IntAngle& angle) {
  Model m = build_model(angle);
  if (m.rational) return RealAlgebraic(evaluate_finite(ContinuedFraction{lls(angle).head, {}}));
  return m.alpha.to_real();
}

BigInt isin(const IntAngle& angle) {
  Model m = build_model(angle);
  if (!m.rational) fail("infinite-sine", "integer sine is undefined for an irrational angle");
  return m.my;
}

BigRat icos(const IntAngle& angle) {
  BigInt s = isin(angle);
  return BigRat(s) / itan(angle).rational_value();
}

IntAngle angle_from_lls(const LLSSequence& seq) {
  if (seq.truncated) fail("bad-lls", "a truncated sequence does not determine an angle");
  if (seq.head.empty() && seq.period.empty()) fail("bad-lls", "empty sequence");
  for (const auto* part : {&seq.head, &seq.period})
    for (const auto& a : *part)
      if (a < 1) fail("bad-lls", "sequence elements must be positive");
  ContinuedFraction cf{seq.head, seq.period};
  if (seq.period.empty()) {
    BigRat v = evaluate_finite(cf);
    return IntAngle{{0, 0}, IntPoint{1, 0}, IntPoint{to_i64(v.get_den()), to_i64(v.get_num())}};
  }
  return IntAngle{{0, 0}, IntPoint{1, 0}, SlopeRay{evaluate(cf), 1}};
}

IkeaResult ikea_check_triangle(const std::vector<LLSSequence>& seqs, std::int64_t budget) {
  if (seqs.size() != 3)
    fail("arity", "a triangle needs exactly 3 sequences, got " + std::to_string(seqs.size()));
  if (budget < 1) fail("bad-input", "budget must be positive");
  for (const auto& s : seqs) {
    if (!s.finite() || s.head.empty()) fail("bad-lls", "triangle angles have finite nonempty sequences");
    for (const auto& a : s.head)
      if (a < 1) fail("bad-lls", "sequence elements must be positive");
  }
  std::array<LLSSequence, 3> rev{reversed(seqs[0]), reversed(seqs[1]), reversed(seqs[2])};
  auto matches = [&](const std::array<LLSSequence, 3>& got) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      bool ok = true;
      for (int j = 0; j < 3 && ok; ++j) ok = got[j] == seqs[perm[j]] || got[j] == rev[perm[j]];
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  struct Slab {
    std::vector<IntPoint> witness;
    std::size_t checked = 0;
  };
  auto slabs = parallel_map<Slab>(static_cast<std::size_t>(budget), [&](std::size_t idx) {
    Slab slab;
    std::int64_t l = static_cast<std::int64_t>(idx) + 1;
    IntPoint a{0, 0}, b{l, 0};
    for (std::int64_t y = 1; y <= budget; ++y)
      for (std::int64_t x = 0; x < y; ++x) {
        IntPoint c{x, y};
        ++slab.checked;
        std::array<LLSSequence, 3> got{lls(IntAngle{a, b, c}), lls(IntAngle{b, c, a}), lls(IntAngle{c, a, b})};
        if (matches(got)) {
          slab.witness = {a, b, c};
          return slab;
        }
      }
    return slab;
  });
  IkeaResult res{IkeaStatus::not_found_within_budget, {}, budget, 0};
  for (const auto& s : slabs) {
    res.triangles_checked += s.checked;
    if (!s.witness.empty()) {
      res.status = IkeaStatus::found;
      res.witness = s.witness;
      break;
    }
  }
  return res;
}

}  // namespace sailkit
