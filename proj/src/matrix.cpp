#include "qrot/matrix.hpp"

#include <algorithm>

namespace qrot {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw GroundSetMismatch("matrix dimension mismatch in product");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix invert(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw GroundSetMismatch("only square matrices can be inverted");
  const std::size_t n = m.rows();
  if (n == 0) return RationalMatrix(0, 0);

  // Scale to a common denominator so elimination stays over the integers.
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = lcm(scale, den(m(i, j)));

  // Augmented [scale*m | scale*I], fraction-free forward elimination.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = m(i, j) * scale;
      a[i][j] = num(s);
    }
    a[i][n + i] = scale;
  }

  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) throw SingularMatrix(k);
      std::swap(a[k], a[r]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  if (a[n - 1][n - 1] == 0) throw SingularMatrix(n - 1);

  // Back-substitution over rationals; columns of the inverse.
  RationalMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational rhs = a[ii][n + c];
      for (std::size_t j = ii + 1; j < n; ++j) rhs -= Rational(a[ii][j]) * inv(j, c);
      inv(ii, c) = rhs / Rational(a[ii][ii]);
    }
  }
  return inv;
}

}  // namespace qrot
