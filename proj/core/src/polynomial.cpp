#include "starlat/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace starlat {

namespace {

void strip_trailing_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void append_term(std::ostringstream& os, bool first, bool negative, const std::string& magnitude,
                 std::size_t k) {
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  const bool unit = magnitude == "1";
  if (k == 0) {
    os << magnitude;
  } else {
    if (!unit) os << magnitude << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Int c, std::size_t degree) {
  std::vector<Int> v(degree + 1, 0);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_pow(std::size_t n) {
  if (n == 0) return IntPolynomial();  // 1 - 1
  std::vector<Int> v(n + 1, 0);
  v[0] = 1;
  v[n] = -1;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> v = coeffs_;
  for (Int& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const bool negative = coeffs_[k] < 0;
    Int mag = negative ? Int(-coeffs_[k]) : coeffs_[k];
    append_term(os, first, negative, mag.str(), k);
    first = false;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::from_polynomial(IntPolynomial p) {
  return RationalFunction(std::move(p), IntPolynomial::constant(1));
}

std::string RationalFunction::str() const {
  if (den_ == IntPolynomial::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace starlat
