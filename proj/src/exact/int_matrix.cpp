#include "sailkit/exact/int_matrix.hpp"

#include <sstream>

#include "sailkit/error.hpp"

namespace sailkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) fail("bad-shape", "ragged matrix literal");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.r_; ++i) {
    if (rows[i].size() != m.c_) fail("bad-shape", "ragged matrix");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& cols) {
  return from_rows(cols).transpose();
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return std::vector<BigInt>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.c_ != b.r_) fail("bad-shape", "matrix product shape mismatch");
  IntMatrix p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail("bad-shape", "matrix sum shape mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + BigInt(-1) * b; }

IntMatrix operator*(const BigInt& s, const IntMatrix& m) {
  IntMatrix r = m;
  for (auto& v : r.a_) v *= s;
  return r;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.c_ != b.c_) return a.c_ < b.c_;
  return a.a_ < b.a_;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != c_) fail("bad-shape", "matrix-vector shape mismatch");
  std::vector<BigInt> out(r_, BigInt(0));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) s += ",";
      s += (*this)(i, j).get_str();
    }
  }
  return s;
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<BigInt> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      BigRat v = parse_rat(cell);
      if (v.get_den() != 1) fail("parse-error", "matrix entry '" + cell + "' is not an integer");
      r.push_back(v.get_num());
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows[0].empty()) fail("parse-error", "empty matrix");
  return from_rows(rows);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

BigInt det(const IntMatrix& m) {
  if (!m.square()) fail("bad-shape", "determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = m;
  BigInt prev(1);
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      a.swap_rows(k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return s * a(n - 1, n - 1);
}

int rank(const IntMatrix& m) {
  IntMatrix h = hnf_row(m);
  int r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < h.cols(); ++j) nz = nz || h(i, j) != 0;
    r += nz;
  }
  return r;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) fail("bad-shape", "adjugate of a non-square matrix");
  std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      BigInt d = det(minor);
      adj(j, i) = ((i + j) % 2 ? -d : d);
    }
  return adj;
}

namespace {

// Columns (p, q) become (s*Cp + t*Cq, u*Cp + v*Cq).
void combine_cols(IntMatrix& m, std::size_t p, std::size_t q, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt x = m(i, p), y = m(i, q);
    m(i, p) = s * x + t * y;
    m(i, q) = u * x + v * y;
  }
}

// Rows (p, q) become (s*Rp + t*Rq, u*Rp + v*Rq).
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt x = m(p, j), y = m(q, j);
    m(p, j) = s * x + t * y;
    m(q, j) = u * x + v * y;
  }
}

struct Bezout {
  BigInt g, s, t;
};

Bezout bezout(const BigInt& a, const BigInt& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

IntMatrix hnf_column(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    for (std::size_t j = c + 1; j < h.cols(); ++j) {
      if (h(r, j) == 0) continue;
      BigInt a = h(r, c), b = h(r, j);
      Bezout e = bezout(a, b);
      combine_cols(h, c, j, e.s, e.t, BigInt(-b / e.g), BigInt(a / e.g));
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0)
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) = -h(i, c);
    for (std::size_t j = 0; j < c; ++j) {
      BigInt q = floor_div(h(r, j), h(r, c));
      if (q == 0) continue;
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) -= q * h(i, c);
    }
    ++c;
  }
  return h;
}

IntMatrix hnf_row(const IntMatrix& m) { return hnf_column(m.transpose()).transpose(); }

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(diag.rows(), diag.cols()); ++i)
    if (diag(i, i) != 0) d.push_back(diag(i, i));
  return d;
}

SmithForm smith(const IntMatrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  SmithForm f{m, IntMatrix::identity(R), IntMatrix::identity(C), IntMatrix::identity(R)};
  IntMatrix& d = f.diag;
  auto row_op = [&](std::size_t p, std::size_t q, const BigInt& s, const BigInt& t, const BigInt& u,
                    const BigInt& v) {
    combine_rows(d, p, q, s, t, u, v);
    combine_rows(f.left, p, q, s, t, u, v);
    // left_inverse picks up the inverse 2x2 block on the right: [[v,-t],[-u,s]].
    combine_cols(f.left_inverse, p, q, v, -u, BigInt(-t), s);
  };
  auto col_op = [&](std::size_t p, std::size_t q, const BigInt& s, const BigInt& t, const BigInt& u,
                    const BigInt& v) {
    combine_cols(d, p, q, s, t, u, v);
    combine_cols(f.right, p, q, s, t, u, v);
  };
  for (std::size_t k = 0; k < std::min(R, C); ++k) {
    // Smallest nonzero entry of the trailing block goes to (k, k).
    std::size_t pi = R, pj = C;
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j)
        if (d(i, j) != 0 && (pi == R || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
    if (pi == R) break;
    if (pi != k) {
      d.swap_rows(k, pi);
      f.left.swap_rows(k, pi);
      f.left_inverse.swap_cols(k, pi);
    }
    if (pj != k) {
      d.swap_cols(k, pj);
      f.right.swap_cols(k, pj);
    }
    for (;;) {
      for (std::size_t i = k + 1; i < R; ++i) {
        if (d(i, k) == 0) continue;
        BigInt a = d(k, k), b = d(i, k);
        if (b % a == 0) {
          row_op(k, i, BigInt(1), BigInt(0), BigInt(-b / a), BigInt(1));
          continue;
        }
        Bezout e = bezout(a, b);
        row_op(k, i, e.s, e.t, BigInt(-b / e.g), BigInt(a / e.g));
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (d(k, j) == 0) continue;
        BigInt a = d(k, k), b = d(k, j);
        if (b % a == 0) {
          col_op(k, j, BigInt(1), BigInt(0), BigInt(-b / a), BigInt(1));
          continue;
        }
        Bezout e = bezout(a, b);
        col_op(k, j, e.s, e.t, BigInt(-b / e.g), BigInt(a / e.g));
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < R && clean; ++i) clean = d(i, k) == 0;
      if (!clean) continue;
      // Divisibility: fold an offending row into row k and repeat.
      std::size_t bad = R;
      for (std::size_t i = k + 1; i < R && bad == R; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (d(i, j) % d(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      row_op(k, bad, BigInt(1), BigInt(1), BigInt(0), BigInt(1));
    }
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < C; ++j) d(k, j) = -d(k, j);
      for (std::size_t j = 0; j < R; ++j) f.left(k, j) = -f.left(k, j);
      for (std::size_t i = 0; i < R; ++i) f.left_inverse(i, k) = -f.left_inverse(i, k);
    }
  }
  return f;
}

namespace {

void require_independent(const IntMatrix& cols) {
  if (rank(cols) != static_cast<int>(cols.cols()))
    fail("rank-deficient", "vectors " + cols.transpose().to_string() + " are linearly dependent");
}

}  // namespace

BigInt sublattice_index(const IntMatrix& columns) {
  require_independent(columns);
  BigInt idx(1);
  for (const BigInt& v : smith(columns).diagonal()) idx *= v;
  return idx;
}

IntMatrix saturation(const IntMatrix& columns) {
  require_independent(columns);
  SmithForm f = smith(columns);
  IntMatrix s(columns.rows(), columns.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = f.left_inverse(i, j);
  return s;
}

}  // namespace sailkit
