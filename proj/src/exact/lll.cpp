#include "sailkit/exact/lll.hpp"

#include <utility>

namespace sailkit {

namespace {

struct GramSchmidt {
  std::vector<std::vector<BigRat>> mu;
  std::vector<BigRat> norm2;
};

BigRat dot(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  BigRat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

GramSchmidt orthogonalise(const std::vector<std::vector<BigInt>>& b) {
  std::size_t n = b.size(), m = b.empty() ? 0 : b[0].size();
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<BigRat>(n));
  gs.norm2.assign(n, BigRat(0));
  std::vector<std::vector<BigRat>> star(n, std::vector<BigRat>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) star[i][k] = b[i][k];
    std::vector<BigRat> bi = star[i];
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = gs.norm2[j] == 0 ? BigRat(0) : BigRat(dot(bi, star[j]) / gs.norm2[j]);
      for (std::size_t k = 0; k < m; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    gs.norm2[i] = dot(star[i], star[i]);
  }
  return gs;
}

BigInt round_rat(const BigRat& x) { return floor(BigRat(x + BigRat(1, 2))); }

}  // namespace

std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> b, const BigRat& delta) {
  std::size_t n = b.size();
  if (n < 2) return b;
  GramSchmidt gs = orthogonalise(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      BigInt q = round_rat(gs.mu[k][j]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
      for (std::size_t i = 0; i < j; ++i) gs.mu[k][i] -= q * gs.mu[j][i];
      gs.mu[k][j] -= q;
    }
    BigRat m = gs.mu[k][k - 1];
    if (gs.norm2[k] >= (delta - m * m) * gs.norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = orthogonalise(b);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

}  // namespace sailkit
