#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sailkit/exact/rational.hpp"

namespace sailkit {

// Dense rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<BigInt> row(std::size_t i) const;
  std::vector<BigInt> column(std::size_t j) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& m);
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  // "a,b,c;d,e,f"
  std::string to_string() const;
  static IntMatrix parse(const std::string& text);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<BigInt> a_;
};

BigInt det(const IntMatrix& m);
int rank(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& m);  // square, adj(M) M = det(M) I

// Column-style Hermite normal form H = M U (U unimodular): lower echelon,
// positive pivots, entries left of a pivot reduced into [0, pivot).
IntMatrix hnf_column(const IntMatrix& m);
// Row-style form H = U M: upper echelon, entries above a pivot in [0, pivot).
IntMatrix hnf_row(const IntMatrix& m);

// left * m * right = diag, d_1 | d_2 | ..., left_inverse = left^-1.
struct SmithForm {
  IntMatrix diag, left, right, left_inverse;
  std::vector<BigInt> diagonal() const;  // nonzero entries
};
SmithForm smith(const IntMatrix& m);

// For a matrix whose columns are linearly independent vectors of Z^n:
// the index of their span inside the saturated lattice Z^n ∩ span.
BigInt sublattice_index(const IntMatrix& columns);
// Basis (as columns) of Z^n ∩ span(columns); requires independent columns.
IntMatrix saturation(const IntMatrix& columns);

}  // namespace sailkit
