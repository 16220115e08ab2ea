#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starlat/coxeter.hpp"
#include "starlat/polynomial.hpp"
#include "starlat/series.hpp"

namespace starlat {

// Input of the whole pipeline: genus g >= 0 and orbit weights
// alpha_1 <= ... <= alpha_r, each >= 2 (r may be 0).
struct FuchsianData {
  long long genus = 0;
  std::vector<long long> alphas;

  bool operator==(const FuchsianData&) const = default;
  std::string str() const;  // "(g; a1,...,ar)"
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks genus >= 0, alpha_i >= 2, ascending order, and the strict
// hyperbolicity inequality sum(1/alpha_i) < r + 2g - 2 in exact rational
// arithmetic. Violations are data, not exceptions.
ValidationResult validate(const FuchsianData& data);

// Necessary condition for negative smoothability: sum(alpha_i) <= 19 + r.
// Informational only.
bool smoothability_hint(const FuchsianData& data);

// Star-shaped lattice: r chains of (-2)-vectors E_1^i, ..., E_{alpha_i-1}^i,
// consecutive members pairing 1, each chain attached to the central vector E
// through its highest-index member (<E_{alpha_i-1}^i, E> = 1), and
// <E,E> = 2g - 2. Basis order: chain 1, ..., chain r, then E.
AlmostRootBasis star_lattice(const FuchsianData& data);

// k(2g-2) + sum_i floor(k(alpha_i-1)/alpha_i).
Int divisor_degree(const FuchsianData& data, long long k);

// Dimension counts: c_0 = 1, c_1 = g, c_k = 1 - g + divisor_degree(k) for
// k >= 2. Requires divisor_degree(k) > 2g-2 for those k and throws
// RiemannRochRegimeViolated otherwise.
TruncatedSeries poincare_direct(const FuchsianData& data, unsigned order);

// hilbert_poincare_series of the star lattice, plus g at t^0 and 1 at t^1.
TruncatedSeries poincare_orbit(const FuchsianData& data, unsigned order);

// Expansion of delta_plus/delta0. Coefficients must come out as nonnegative
// integers; NonIntegralCoefficient/NegativeCoefficient signal a bug.
TruncatedSeries poincare_theorem(const FuchsianData& data, unsigned order);

IntPolynomial delta0(const FuchsianData& data);       // char_poly_reversed(tau0 on V0)
IntPolynomial delta_plus(const FuchsianData& data);   // char_poly_reversed(tau_plus on V+)

// prod_i (1 - t^{alpha_i}) * (1-t)^{2-2g-r}, the negative exponent realized
// as a genuine denominator (1-t)^{r+2g-2}.
RationalFunction psi_a(const FuchsianData& data);

struct OrbitPairingCheck {
  bool ok = true;
  std::optional<long long> first_failure_k;
  Int lhs;  // <E, sum_{l<k} tau0^l E> at the first failure
  Int rhs;  // divisor_degree(k) at the first failure
};

// Verifies <E, sum_{l=0}^{k-1} tau0^l(E)> = divisor_degree(k) for 1 <= k <= kmax.
OrbitPairingCheck orbit_pairing_check(const FuchsianData& data, long long kmax);

struct FuchsianReport {
  FuchsianData input;
  bool valid = false;
  std::vector<std::string> violations;
  bool forced = false;
  bool smoothable_hint = false;
  std::size_t rank_vminus = 0;
  std::size_t rank_v0 = 0;
  std::size_t rank_vplus = 0;
  IntPolynomial delta0;
  IntPolynomial delta_plus;
  RationalFunction psi_a;
  unsigned order = 0;
  std::optional<TruncatedSeries> theorem_series;  // absent when forced past validation
  TruncatedSeries orbit_series;
  std::optional<TruncatedSeries> direct_series;   // absent when forced past validation
  std::optional<bool> series_agree;               // undefined when forced
  bool orbit_pairing = false;
  bool radical_is_u = false;
  std::optional<bool> psi_eq_delta0;              // g = 0 and validated only

  bool all_checks_pass() const;
};

// Runs everything above and cross-checks the three series. Throws
// ValidationFailed on invalid data unless force is set; with force the
// theorem and direct series and the agreement flag stay empty.
FuchsianReport full_report(const FuchsianData& data, unsigned order, bool force = false);

// Built-in demonstration inputs; entries store only (g; alpha), every derived
// quantity is recomputed on use.
const std::vector<FuchsianData>& catalog();

}  // namespace starlat
