#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starlat/numeric.hpp"
#include "starlat/polynomial.hpp"

namespace starlat {

// Formal power series truncated at a fixed order: exactly order+1 exact
// rational coefficients, for t^0 .. t^order.
class TruncatedSeries {
 public:
  TruncatedSeries() : order_(0), coeffs_(1, Rat(0)) {}
  TruncatedSeries(unsigned order, std::vector<Rat> coeffs);

  static TruncatedSeries zero(unsigned order);
  static TruncatedSeries from_polynomial(const IntPolynomial& p, unsigned order);

  unsigned order() const { return order_; }
  const Rat& coeff(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool all_integral() const;
  TruncatedSeries truncated(unsigned m) const;              // m <= order
  TruncatedSeries with_added(std::size_t k, const Rat& d) const;

  bool operator==(const TruncatedSeries&) const = default;

  std::string str() const;  // sparse form, zero terms omitted

 private:
  unsigned order_;
  std::vector<Rat> coeffs_;
};

struct SeriesComparison {
  bool equal = false;
  std::size_t first_mismatch = 0;  // meaningful only when !equal
  Rat lhs;
  Rat rhs;
};

// Componentwise exact comparison; throws OrderMismatch when orders differ.
SeriesComparison series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

// Power-series expansion of num/den to the given order.
// Throws DenominatorVanishesAtZero when den(0) = 0.
TruncatedSeries series_from_rational(const RationalFunction& f, unsigned order);

// Truncated product; both factors must carry the same order.
TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace starlat
