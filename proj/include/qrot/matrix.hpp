#pragma once

#include <vector>

#include "qrot/errors.hpp"
#include "qrot/rational.hpp"

namespace qrot {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Exact inverse: the matrix is scaled to integers, triangularized by
// fraction-free (Bareiss) elimination with exact nonzero pivoting, and the
// inverse is recovered by rational back-substitution. Throws SingularMatrix
// with the failing row index.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace qrot
