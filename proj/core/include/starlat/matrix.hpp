#pragma once

#include <cstddef>
#include <vector>

#include "starlat/numeric.hpp"

namespace starlat {

// Dense matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  bool is_symmetric() const;
  Int trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

// Coefficients of det(tI - m), ascending degree, size n+1, leading 1.
// Faddeev-LeVerrier over the integers; the internal divisions are exact.
std::vector<Int> monic_char_poly(const IntMatrix& m);

Int determinant(const IntMatrix& m);

// Exact inverse for det = +-1; throws NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace starlat
