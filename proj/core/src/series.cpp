#include "starlat/series.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "starlat/errors.hpp"

namespace starlat {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("truncated series needs exactly order+1 coefficients");
}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
  return TruncatedSeries(order, std::vector<Rat>(order + 1, Rat(0)));
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, unsigned order) {
  std::vector<Rat> c(order + 1, Rat(0));
  for (std::size_t k = 0; k <= order; ++k) c[k] = Rat(p.coeff(k));
  return TruncatedSeries(order, std::move(c));
}

bool TruncatedSeries::all_integral() const {
  for (const Rat& c : coeffs_)
    if (!is_integral(c)) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated(unsigned m) const {
  if (m > order_) throw OrderMismatch("cannot truncate to a higher order");
  return TruncatedSeries(m, std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

TruncatedSeries TruncatedSeries::with_added(std::size_t k, const Rat& d) const {
  std::vector<Rat> c = coeffs_;
  c.at(k) += d;
  return TruncatedSeries(order_, std::move(c));
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const bool negative = coeffs_[k] < 0;
    Rat mag = negative ? Rat(-coeffs_[k]) : coeffs_[k];
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const std::string m = mag.str();
    if (k == 0) {
      os << m;
    } else {
      if (m != "1") os << m << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

SeriesComparison series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
  SeriesComparison cmp;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a.coeff(k) != b.coeff(k)) {
      cmp.equal = false;
      cmp.first_mismatch = k;
      cmp.lhs = a.coeff(k);
      cmp.rhs = b.coeff(k);
      return cmp;
    }
  }
  cmp.equal = true;
  return cmp;
}

TruncatedSeries series_from_rational(const RationalFunction& f, unsigned order) {
  const IntPolynomial& num = f.num();
  const IntPolynomial& den = f.den();
  const Int den0 = den.coeff(0);
  if (den0 == 0) throw DenominatorVanishesAtZero("denominator vanishes at t = 0");

  std::vector<Rat> c(order + 1, Rat(0));
  const std::size_t dden = static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k <= order; ++k) {
    Rat acc(num.coeff(k));
    const std::size_t jmax = k < dden ? k : dden;
    for (std::size_t j = 1; j <= jmax; ++j) acc -= Rat(den.coeff(j)) * c[k - j];
    c[k] = acc / Rat(den0);
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch("series truncation orders differ");
  std::vector<Rat> c(a.order() + 1, Rat(0));
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j <= b.order(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return TruncatedSeries(a.order(), std::move(c));
}

}  // namespace starlat
