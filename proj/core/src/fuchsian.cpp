#include "starlat/fuchsian.hpp"

#include <sstream>
#include <utility>

#include "starlat/errors.hpp"

namespace starlat {

std::string FuchsianData::str() const {
  std::ostringstream os;
  os << "(" << genus << ";";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    os << (i == 0 ? " " : ",") << alphas[i];
  }
  os << ")";
  return os.str();
}

ValidationResult validate(const FuchsianData& data) {
  ValidationResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.violations.push_back(std::move(msg));
  };

  if (data.genus < 0) fail("genus must be nonnegative, got " + std::to_string(data.genus));
  for (std::size_t i = 0; i < data.alphas.size(); ++i) {
    if (data.alphas[i] < 2)
      fail("alpha_" + std::to_string(i + 1) + " must be >= 2, got " +
           std::to_string(data.alphas[i]));
    if (i > 0 && data.alphas[i] < data.alphas[i - 1])
      fail("alphas must be sorted ascending, alpha_" + std::to_string(i + 1) + " = " +
           std::to_string(data.alphas[i]) + " follows " + std::to_string(data.alphas[i - 1]));
  }
  if (res.ok) {
    Rat lhs(0);
    for (long long a : data.alphas) lhs += Rat(Int(1), Int(a));
    const Rat rhs(Int(static_cast<long long>(data.alphas.size()) + 2 * data.genus - 2));
    if (!(lhs < rhs)) {
      fail("hyperbolicity fails: sum(1/alpha_i) = " + lhs.str() + " is not < r + 2g - 2 = " +
           rhs.str());
    }
  }
  return res;
}

bool smoothability_hint(const FuchsianData& data) {
  Int total = 0;
  for (long long a : data.alphas) total += a;
  return total <= Int(19 + static_cast<long long>(data.alphas.size()));
}

AlmostRootBasis star_lattice(const FuchsianData& data) {
  for (long long a : data.alphas) {
    if (a < 2) throw InvalidAlpha("orbit weights must be >= 2, got " + std::to_string(a));
  }
  std::size_t n = 1;
  for (long long a : data.alphas) n += static_cast<std::size_t>(a - 1);

  IntMatrix gram(n, n);
  std::vector<std::string> labels(n);
  const std::size_t center = n - 1;
  labels[center] = "E";
  gram.at(center, center) = 2 * Int(data.genus) - 2;

  std::size_t pos = 0;
  for (std::size_t i = 0; i < data.alphas.size(); ++i) {
    const std::size_t len = static_cast<std::size_t>(data.alphas[i] - 1);
    for (std::size_t j = 0; j < len; ++j, ++pos) {
      labels[pos] = "E_" + std::to_string(j + 1) + "^" + std::to_string(i + 1);
      gram.at(pos, pos) = -2;
      if (j + 1 < len) {
        gram.at(pos, pos + 1) = 1;
        gram.at(pos + 1, pos) = 1;
      }
    }
    // The chain touches the central vector at its highest-index member.
    gram.at(pos - 1, center) = 1;
    gram.at(center, pos - 1) = 1;
  }
  return AlmostRootBasis(Lattice(std::move(gram), std::move(labels)));
}

Int divisor_degree(const FuchsianData& data, long long k) {
  Int deg = Int(k) * (2 * Int(data.genus) - 2);
  for (long long a : data.alphas) deg += (Int(k) * (a - 1)) / a;
  return deg;
}

TruncatedSeries poincare_direct(const FuchsianData& data, unsigned order) {
  const Int g(data.genus);
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  c[0] = 1;
  if (order >= 1) c[1] = Rat(g);
  for (unsigned k = 2; k <= order; ++k) {
    const Int deg = divisor_degree(data, k);
    if (!(deg > 2 * g - 2))
      throw RiemannRochRegimeViolated("deg D^(" + std::to_string(k) + ") = " + deg.str() +
                                      " is not > 2g - 2");
    c[k] = Rat(1 - g + deg);
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries poincare_orbit(const FuchsianData& data, unsigned order) {
  TruncatedSeries s =
      hilbert_poincare_series(star_lattice(data), order).with_added(0, Rat(Int(data.genus)));
  if (order >= 1) s = s.with_added(1, Rat(1));
  return s;
}

IntPolynomial delta0(const FuchsianData& data) {
  return char_poly_reversed(tau0(star_lattice(data), ExtensionMode::V0));
}

IntPolynomial delta_plus(const FuchsianData& data) {
  return char_poly_reversed(tau_plus(star_lattice(data)));
}

RationalFunction psi_a(const FuchsianData& data) {
  IntPolynomial num = IntPolynomial::constant(1);
  for (long long a : data.alphas) num = num * IntPolynomial::one_minus_t_pow(static_cast<std::size_t>(a));
  const long long exponent = 2 - 2 * data.genus - static_cast<long long>(data.alphas.size());
  IntPolynomial den = IntPolynomial::constant(1);
  if (exponent >= 0) {
    num = num * pow(IntPolynomial::one_minus_t_pow(1), static_cast<unsigned>(exponent));
  } else {
    den = pow(IntPolynomial::one_minus_t_pow(1), static_cast<unsigned>(-exponent));
  }
  return RationalFunction(std::move(num), std::move(den));
}

TruncatedSeries poincare_theorem(const FuchsianData& data, unsigned order) {
  const TruncatedSeries s =
      series_from_rational(RationalFunction(delta_plus(data), delta0(data)), order);
  for (std::size_t k = 0; k <= order; ++k) {
    if (!is_integral(s.coeff(k)))
      throw NonIntegralCoefficient("p_A coefficient at t^" + std::to_string(k) +
                                   " is not an integer: " + s.coeff(k).str());
    if (s.coeff(k) < 0)
      throw NegativeCoefficient("p_A coefficient at t^" + std::to_string(k) + " is negative: " +
                                s.coeff(k).str());
  }
  return s;
}

OrbitPairingCheck orbit_pairing_check(const FuchsianData& data, long long kmax) {
  const AlmostRootBasis basis = star_lattice(data);
  const ExtendedLattice ext = extend(basis, ExtensionMode::V0);
  const Isometry step = tau0(basis, ExtensionMode::V0);

  OrbitPairingCheck check;
  Int partial = 0;
  Vector v = ext.e;
  for (long long k = 1; k <= kmax; ++k) {
    partial += pairing(ext.lattice, ext.e, v);
    v = step(v);
    const Int expected = divisor_degree(data, k);
    if (partial != expected) {
      check.ok = false;
      check.first_failure_k = k;
      check.lhs = partial;
      check.rhs = expected;
      return check;
    }
  }
  return check;
}

namespace {

bool radical_is_exactly_u(const Lattice& v0, std::size_t u_index) {
  const std::vector<Vector> rad = radical_basis(v0);
  if (rad.size() != 1) return false;
  const Vector u = Vector::unit(v0.rank(), u_index);
  return rad[0] == u || rad[0] == -u;
}

}  // namespace

bool FuchsianReport::all_checks_pass() const {
  if (!valid) return false;
  if (series_agree.has_value() && !*series_agree) return false;
  if (!orbit_pairing) return false;
  if (!radical_is_u) return false;
  if (psi_eq_delta0.has_value() && !*psi_eq_delta0) return false;
  return true;
}

FuchsianReport full_report(const FuchsianData& data, unsigned order, bool force) {
  FuchsianReport report;
  report.input = data;
  const ValidationResult validation = validate(data);
  report.valid = validation.ok;
  report.violations = validation.violations;
  report.forced = !validation.ok && force;
  if (!validation.ok && !force) {
    std::string msg = "validation failed:";
    for (const std::string& v : validation.violations) msg += " " + v + ";";
    throw ValidationFailed(msg);
  }

  report.smoothable_hint = smoothability_hint(data);
  const AlmostRootBasis basis = star_lattice(data);
  report.rank_vminus = basis.rank();
  report.rank_v0 = basis.rank() + 1;
  report.rank_vplus = basis.rank() + 2;
  report.order = order;

  report.delta0 = char_poly_reversed(tau0(basis, ExtensionMode::V0));
  report.delta_plus = char_poly_reversed(tau_plus(basis));
  report.psi_a = psi_a(data);
  report.orbit_series = poincare_orbit(data, order);
  report.radical_is_u = radical_is_exactly_u(extend(basis, ExtensionMode::V0).lattice,
                                             basis.rank());
  report.orbit_pairing = orbit_pairing_check(data, order).ok;

  if (validation.ok) {
    report.theorem_series = poincare_theorem(data, order);
    report.direct_series = poincare_direct(data, order);
    const bool theorem_orbit =
        series_equal(*report.theorem_series, report.orbit_series).equal;
    const bool orbit_direct = series_equal(report.orbit_series, *report.direct_series).equal;
    report.series_agree = theorem_orbit && orbit_direct;
    if (data.genus == 0) {
      report.psi_eq_delta0 = (report.delta0 * report.psi_a.den() == report.psi_a.num());
    }
  }
  return report;
}

const std::vector<FuchsianData>& catalog() {
  static const std::vector<FuchsianData> entries = {
      {0, {2, 3, 7}}, {0, {2, 3, 8}}, {0, {2, 4, 5}},    {0, {3, 3, 4}},
      {0, {2, 2, 2, 3}}, {1, {2}},    {1, {2, 2}},       {1, {3}},
      {2, {}},        {2, {2}},       {3, {}},           {0, {2, 3, 13}},
  };
  return entries;
}

}  // namespace starlat
