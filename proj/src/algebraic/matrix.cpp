#include <algorithm>

#include "sailkit/algebraic/algebraic.hpp"
#include "sailkit/error.hpp"

namespace sailkit {

namespace {

using FMat = std::vector<std::vector<FieldElem>>;

FMat adjugate(const FMat& m) {
  std::size_t n = m.size();
  if (n == 2) return {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
  FMat r(3, std::vector<FieldElem>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cyclic minors carry the cofactor sign already.
      r[j][i] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    }
  return r;
}

int orthant_sign(const AlgebraicCone& c, std::size_t i) { return c.orthant_signs[i]; }

}  // namespace

Poly characteristic_polynomial(const IntMatrix& a) {
  if (!a.square() || (a.rows() != 2 && a.rows() != 3))
    fail("bad-matrix", "expected a 2x2 or 3x3 matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  BigInt tr = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) tr += a(i, i);
  BigInt d = det(a);
  if (a.rows() == 2) return Poly(std::vector<BigRat>{BigRat(d), BigRat(-tr), BigRat(1)});
  BigInt c2 = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) c2 += a(i, i) * a(j, j) - a(i, j) * a(j, i);
  return Poly(std::vector<BigRat>{BigRat(-d), BigRat(c2), BigRat(-tr), BigRat(1)});
}

FormCone AlgebraicCone::form_cone() const {
  FormCone c;
  std::size_t n = eigen_forms.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElem> co = eigen_forms[i].coeffs;
    if (orthant_sign(*this, i) < 0)
      for (auto& e : co) e = -e;
    c.forms.emplace_back(std::move(co));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = eigen_vectors[j];
    FieldElem s(v[0].field(), BigRat(0));
    for (std::size_t k = 0; k < n; ++k) s = s + c.forms[j].coeffs[k] * v[k];
    std::vector<FieldElem> r = v;
    if (s.sign() < 0)
      for (auto& e : r) e = -e;
    c.rays.push_back(std::move(r));
  }
  return c;
}

std::vector<AlgebraicCone> validate_matrix(const IntMatrix& a) {
  Poly cp = characteristic_polynomial(a);
  std::size_t n = a.rows();
  BigInt d = det(a);
  if (d != 1 && d != -1) fail("not-unimodular", "det = " + d.get_str() + ", expected +-1");
  if (!rational_roots(cp).empty())
    fail("reducible-charpoly", "characteristic polynomial " + cp.to_string() + " has a rational root");
  auto roots = RealAlgebraic::real_roots(cp);
  if (roots.size() != n)
    fail("complex-roots", "characteristic polynomial " + cp.to_string() + " has non-real roots");

  AlgebraicCone base;
  base.matrix = a;
  base.charpoly = cp;
  base.eigenvalues = roots;
  for (std::size_t i = 0; i < n; ++i) {
    FieldPtr f = NumberField::make(roots[i]);
    FieldElem t = FieldElem::theta(f);
    FMat b(n, std::vector<FieldElem>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        b[r][c] = FieldElem(f, BigRat(a(r, c)));
        if (r == c) b[r][c] = b[r][c] - t;
      }
    FMat adj = adjugate(b);
    // adj(B) has rank one: its rows are left and its columns right kernel vectors.
    std::size_t row = 0, col = 0;
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r)
      for (std::size_t c = 0; c < n && !found; ++c)
        if (!adj[r][c].is_zero()) {
          row = r;
          col = c;
          found = true;
        }
    if (!found) fail("internal-eigenvector", "zero adjugate at a simple eigenvalue", ErrorKind::internal);
    std::vector<FieldElem> v;
    for (std::size_t r = 0; r < n; ++r) v.push_back(adj[r][col]);
    base.eigen_forms.emplace_back(adj[row]);
    base.eigen_vectors.push_back(std::move(v));
  }

  std::vector<AlgebraicCone> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    AlgebraicCone c = base;
    c.orthant_signs.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << (n - 1 - i))) c.orthant_signs[i] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

AlgebraicCone positive_cone(const IntMatrix& a) { return validate_matrix(a).back(); }

namespace {

// Coordinates c with m = sum c_k A^k, read off the cyclic vector e_1.
std::vector<BigRat> centralizer_coords(const IntMatrix& a, const IntMatrix& m) {
  std::size_t n = a.rows();
  if (!m.square() || m.rows() != n) fail("dimension-mismatch", "matrix sizes differ");
  std::vector<std::vector<BigInt>> kry;
  std::vector<BigInt> e(n, BigInt(0));
  e[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    kry.push_back(e);
    e = a.apply(e);
  }
  IntMatrix k = IntMatrix::from_columns(kry);
  BigInt dk = det(k);
  IntMatrix adj = adjugate(k);
  std::vector<BigInt> rhs = m.column(0);
  std::vector<BigInt> num = adj.apply(rhs);
  std::vector<BigRat> c;
  for (auto& x : num) c.push_back(make_rat(x, dk));
  // Verify m = sum c_k A^k exactly.
  IntMatrix p = IntMatrix::identity(n);
  std::vector<std::vector<BigRat>> acc(n, std::vector<BigRat>(n, BigRat(0)));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc[i][j] += c[t] * BigRat(p(i, j));
    p = p * a;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (acc[i][j] != BigRat(m(i, j))) fail("not-in-centralizer", m.to_string() + " does not commute with " + a.to_string());
  return c;
}

}  // namespace

std::vector<FieldElem> unit_eigenvalues(const AlgebraicCone& cone, const IntMatrix& m) {
  auto c = centralizer_coords(cone.matrix, m);
  std::vector<FieldElem> out;
  for (const auto& form : cone.eigen_forms) {
    FieldPtr f = form.coeffs[0].field();
    FieldElem t = FieldElem::theta(f), pw(f, BigRat(1)), s(f, BigRat(0));
    for (const auto& ck : c) {
      s = s + FieldElem(f, ck) * pw;
      pw = pw * t;
    }
    out.push_back(s);
  }
  return out;
}

AlgebraicCone image_cone(const AlgebraicCone& cone, const IntMatrix& m) {
  auto mu = unit_eigenvalues(cone, m);
  AlgebraicCone out = cone;
  for (std::size_t i = 0; i < mu.size(); ++i) out.orthant_signs[i] *= mu[i].sign();
  return out;
}

std::vector<std::pair<std::string, IntMatrix>> shipped_cubics() {
  // Companion matrices of x^3 + a2 x^2 + a1 x + a0: last column (-a0, -a1, -a2).
  auto companion = [](long a0, long a1, long a2) {
    return IntMatrix{{0, 0, -a0}, {1, 0, -a1}, {0, 1, -a2}};
  };
  return {
      {"x^3-3x+1", companion(1, -3, 0)},
      {"x^3-x^2-2x+1", companion(1, -2, -1)},
      {"x^3-4x+1", companion(1, -4, 0)},
      {"x^3-6x^2+5x-1", companion(-1, 5, -6)},
  };
}

}  // namespace sailkit
