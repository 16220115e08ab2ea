#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starlat/numeric.hpp"

namespace starlat {

// Univariate polynomial with exact integer coefficients, stored ascending by
// degree with no trailing zeros (the zero polynomial stores nothing).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, std::size_t degree);
  static IntPolynomial one_minus_t_pow(std::size_t n);  // 1 - t^n

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  std::string str() const;  // e.g. "1 - 2*t + t^2"

 private:
  std::vector<Int> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

// Quotient of integer polynomials. Stored unreduced; the only normalization
// is that the denominator's leading coefficient is positive (sign moves into
// the numerator).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}  // 0/1
  RationalFunction(IntPolynomial num, IntPolynomial den);

  static RationalFunction from_polynomial(IntPolynomial p);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  std::string str() const;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

// Equality as rational functions: a.num*b.den == b.num*a.den.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

}  // namespace starlat
