#include "starlat/matrix.hpp"

#include <stdexcept>

#include "starlat/errors.hpp"

namespace starlat {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) += b.at(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

namespace {

struct FaddeevLeVerrier {
  std::vector<Int> coeffs;  // det(tI - M), ascending, size n+1
  IntMatrix adj_aux;        // M_{n-1} + c_1 * I; inverse = -adj_aux / c_0
};

FaddeevLeVerrier faddeev_leverrier(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char poly needs a square matrix");
  const std::size_t n = m.rows();
  FaddeevLeVerrier out;
  out.coeffs.assign(n + 1, 0);
  out.coeffs[n] = 1;
  out.adj_aux = IntMatrix::identity(n);
  if (n == 0) return out;

  IntMatrix a = m;  // M_k
  out.coeffs[n - 1] = -a.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    IntMatrix t = a;
    const Int& shift = out.coeffs[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) += shift;
    if (k == n) out.adj_aux = t;
    a = m * t;
    Int tr = a.trace();
    if (tr % Int(k) != 0) throw std::logic_error("Faddeev-LeVerrier trace not divisible");
    out.coeffs[n - k] = -tr / Int(k);
  }
  return out;
}

}  // namespace

std::vector<Int> monic_char_poly(const IntMatrix& m) { return faddeev_leverrier(m).coeffs; }

Int determinant(const IntMatrix& m) {
  const std::vector<Int> p = monic_char_poly(m);
  // det(tI - M) at t = 0 is (-1)^n det(M).
  return m.rows() % 2 == 0 ? p[0] : Int(-p[0]);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  FaddeevLeVerrier fl = faddeev_leverrier(m);
  const Int& c0 = fl.coeffs[0];
  if (c0 != 1 && c0 != -1) throw NotUnimodular("matrix determinant is not +-1");
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = -fl.adj_aux.at(i, j) * c0;
  return inv;
}

}  // namespace starlat
