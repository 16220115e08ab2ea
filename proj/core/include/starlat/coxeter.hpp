#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "starlat/isometry.hpp"
#include "starlat/lattice.hpp"
#include "starlat/series.hpp"

namespace starlat {

// Even lattice almost generated by roots: every basis vector except the last
// one, e, is a root. The order of the root vectors is part of the data; the
// Coxeter-type elements below depend on it and never reorder.
class AlmostRootBasis {
 public:
  explicit AlmostRootBasis(Lattice vminus);

  const Lattice& vminus() const { return vminus_; }
  std::size_t rank() const { return vminus_.rank(); }        // n >= 1
  std::size_t e_index() const { return rank() - 1; }
  Int e_norm() const { return vminus_.gram().at(e_index(), e_index()); }
  Int genus() const { return e_norm() / 2 + 1; }             // <e,e> = 2g - 2

  bool operator==(const AlmostRootBasis&) const = default;

 private:
  Lattice vminus_;
};

enum class ExtensionMode { V0, VPlus };

struct ExtendedLattice {
  Lattice lattice;
  Vector e;
  Vector u;
  std::optional<Vector> w;  // present in VPlus mode only
  std::size_t e_index = 0;
  std::size_t u_index = 0;
  std::optional<std::size_t> w_index;
};

// V0: append an isotropic orthogonal generator u (rank n+1).
// VPlus: append a hyperbolic plane with basis u, w (rank n+2).
ExtendedLattice extend(const AlmostRootBasis& basis, ExtensionMode mode);

// tau0 = s_{e_1} ... s_{e_{n-1}} psi_{u,e}, rightmost factor applied first.
// On VPlus it preserves the V0 sublattice; this is checked.
Isometry tau0(const AlmostRootBasis& basis, ExtensionMode mode);

// tau_plus = tau0 s_{u-w} on VPlus, s_{u-w} applied first.
Isometry tau_plus(const AlmostRootBasis& basis);

// Orbit series of (V0, e): coefficient of t^k is
//   1 - g + sum_{l=0}^{k-1} <e, tau0^l(e)>.
// All coefficients are integers.
TruncatedSeries hilbert_poincare_series(const AlmostRootBasis& basis, unsigned order);

struct IdentityCheck {
  bool holds = false;
  TruncatedSeries lhs;  // expansion of char_poly_reversed(tau_plus)/char_poly_reversed(tau0|V0)
  TruncatedSeries rhs;  // hilbert_poincare_series + g + t
  std::optional<std::size_t> first_mismatch;
};

// Checks that both sides above agree coefficient-by-coefficient to the given
// order. They must, for every almost-root basis.
IdentityCheck series_identity_check(const AlmostRootBasis& basis, unsigned order);

// Deterministic RNG for the property harness; bounded draws are computed from
// raw mt19937_64 output so results are identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  long long uniform(long long lo, long long hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

// Random almost-root basis: rank in [1, max_rank], root diagonals -2,
// <e,e> even in [-6, 6], off-diagonal entries in [-3, 3].
AlmostRootBasis random_almost_root_basis(SeededRng& rng, std::size_t max_rank);

}  // namespace starlat
