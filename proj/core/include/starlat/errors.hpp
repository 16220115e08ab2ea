#pragma once

#include <stdexcept>
#include <string>

namespace starlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STARLAT_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

STARLAT_DEFINE_ERROR(DimensionMismatch);
STARLAT_DEFINE_ERROR(LatticeMismatch);
STARLAT_DEFINE_ERROR(InvalidLattice);
STARLAT_DEFINE_ERROR(NotARoot);
STARLAT_DEFINE_ERROR(NotIsotropic);
STARLAT_DEFINE_ERROR(NotOrthogonal);
STARLAT_DEFINE_ERROR(NotAnIsometry);
STARLAT_DEFINE_ERROR(NotUnimodular);
STARLAT_DEFINE_ERROR(DenominatorVanishesAtZero);
STARLAT_DEFINE_ERROR(OrderMismatch);
STARLAT_DEFINE_ERROR(InvalidAlpha);
STARLAT_DEFINE_ERROR(RiemannRochRegimeViolated);
STARLAT_DEFINE_ERROR(ValidationFailed);
STARLAT_DEFINE_ERROR(NonIntegralCoefficient);
STARLAT_DEFINE_ERROR(NegativeCoefficient);
STARLAT_DEFINE_ERROR(ParseError);

#undef STARLAT_DEFINE_ERROR

}  // namespace starlat
