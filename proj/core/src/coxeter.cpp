#include "starlat/coxeter.hpp"

#include <utility>

#include "starlat/errors.hpp"

namespace starlat {

AlmostRootBasis::AlmostRootBasis(Lattice vminus) : vminus_(std::move(vminus)) {
  if (vminus_.rank() == 0) throw InvalidLattice("almost-root basis needs rank >= 1");
  for (std::size_t i = 0; i + 1 < vminus_.rank(); ++i) {
    if (vminus_.gram().at(i, i) != -2)
      throw NotARoot("basis vector " + std::to_string(i) + " is not a root (diagonal " +
                     vminus_.gram().at(i, i).str() + ")");
  }
}

ExtendedLattice extend(const AlmostRootBasis& basis, ExtensionMode mode) {
  const std::size_t n = basis.rank();
  ExtendedLattice ext{
      mode == ExtensionMode::V0
          ? orthogonal_sum(basis.vminus(), Lattice(IntMatrix(1, 1), {"u"}))
          : orthogonal_sum(basis.vminus(), hyperbolic_plane()),
      Vector{}, Vector{}, std::nullopt, n - 1, n, std::nullopt};
  ext.e = ext.lattice.basis_vector(ext.e_index);
  ext.u = ext.lattice.basis_vector(ext.u_index);
  if (mode == ExtensionMode::VPlus) {
    ext.w_index = n + 1;
    ext.w = ext.lattice.basis_vector(*ext.w_index);
  }
  return ext;
}

Isometry tau0(const AlmostRootBasis& basis, ExtensionMode mode) {
  const ExtendedLattice ext = extend(basis, mode);
  Isometry iso = eichler_siegel(ext.lattice, ext.u, ext.e);
  for (std::size_t i = basis.rank() - 1; i-- > 0;) {
    iso = compose(reflection(ext.lattice, ext.lattice.basis_vector(i)), iso);
  }
  if (mode == ExtensionMode::VPlus) {
    // The V0 sublattice (all coordinates but w) must be preserved.
    const std::size_t wrow = *ext.w_index;
    for (std::size_t j = 0; j < wrow; ++j) {
      if (iso.matrix().at(wrow, j) != 0)
        throw NotAnIsometry("tau0 on V+ fails to preserve the V0 sublattice");
    }
  }
  return iso;
}

Isometry tau_plus(const AlmostRootBasis& basis) {
  const ExtendedLattice ext = extend(basis, ExtensionMode::VPlus);
  const Isometry swap = reflection(ext.lattice, ext.u - *ext.w);
  return compose(tau0(basis, ExtensionMode::VPlus), swap);
}

TruncatedSeries hilbert_poincare_series(const AlmostRootBasis& basis, unsigned order) {
  const ExtendedLattice ext = extend(basis, ExtensionMode::V0);
  const Isometry step = tau0(basis, ExtensionMode::V0);
  const Int base = 1 - basis.genus();

  std::vector<Rat> coeffs(static_cast<std::size_t>(order) + 1, Rat(0));
  coeffs[0] = Rat(base);
  Int partial = 0;
  Vector v = ext.e;
  for (unsigned k = 1; k <= order; ++k) {
    partial += pairing(ext.lattice, ext.e, v);
    v = step(v);
    coeffs[k] = Rat(base + partial);
  }
  return TruncatedSeries(order, std::move(coeffs));
}

IdentityCheck series_identity_check(const AlmostRootBasis& basis, unsigned order) {
  const IntPolynomial dplus = char_poly_reversed(tau_plus(basis));
  const IntPolynomial d0 = char_poly_reversed(tau0(basis, ExtensionMode::V0));

  IdentityCheck check;
  check.lhs = series_from_rational(RationalFunction(dplus, d0), order);
  TruncatedSeries rhs = hilbert_poincare_series(basis, order).with_added(0, Rat(basis.genus()));
  if (order >= 1) rhs = rhs.with_added(1, Rat(1));
  check.rhs = rhs;

  const SeriesComparison cmp = series_equal(check.lhs, check.rhs);
  check.holds = cmp.equal;
  if (!cmp.equal) check.first_mismatch = cmp.first_mismatch;
  return check;
}

long long SeededRng::uniform(long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

AlmostRootBasis random_almost_root_basis(SeededRng& rng, std::size_t max_rank) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(max_rank)));
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) gram.at(i, i) = -2;
  gram.at(n - 1, n - 1) = 2 * rng.uniform(-3, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v = rng.uniform(-3, 3);
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  }
  return AlmostRootBasis(Lattice(std::move(gram)));
}

}  // namespace starlat
