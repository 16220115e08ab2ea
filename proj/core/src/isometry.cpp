#include "starlat/isometry.hpp"

#include <utility>

#include "starlat/errors.hpp"

namespace starlat {

namespace {

// Column vector of pairings <b_j, v> = (G v)_j.
std::vector<Int> gram_times(const Lattice& l, const Vector& v) {
  if (v.size() != l.rank()) throw DimensionMismatch("vector length must match the lattice rank");
  std::vector<Int> gv(l.rank(), 0);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) gv[i] += l.gram().at(i, j) * v[j];
  return gv;
}

// m += scale * col * row^T
void add_outer(IntMatrix& m, const Int& scale, const Vector& col, const std::vector<Int>& row) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (col[i] == 0) continue;
    const Int s = scale * col[i];
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += s * row[j];
  }
}

}  // namespace

Isometry::Isometry(Lattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  const std::size_t n = lattice_.rank();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw DimensionMismatch("isometry matrix must be rank x rank");
  if (matrix_.transposed() * lattice_.gram() * matrix_ != lattice_.gram())
    throw NotAnIsometry("matrix does not preserve the Gram form");
  det_ = determinant(matrix_);
  if (det_ != 1 && det_ != -1) throw NotUnimodular("isometry determinant must be +-1");
}

Isometry Isometry::identity(Lattice lattice) {
  IntMatrix m = IntMatrix::identity(lattice.rank());
  return Isometry(std::move(lattice), std::move(m));
}

Isometry reflection(const Lattice& l, const Vector& a) {
  if (a.size() != l.rank()) throw DimensionMismatch("root length must match the lattice rank");
  if (!is_root(l, a)) throw NotARoot("reflection requires <a,a> = -2, got " + pairing(l, a, a).str());
  IntMatrix m = IntMatrix::identity(l.rank());
  add_outer(m, 1, a, gram_times(l, a));
  return Isometry(l, std::move(m));
}

IntMatrix psi_map(const Lattice& l, const std::vector<std::pair<Vector, Vector>>& pairs) {
  IntMatrix m = IntMatrix::identity(l.rank());
  for (const auto& [u, a] : pairs) {
    if (u.size() != l.rank() || a.size() != l.rank())
      throw DimensionMismatch("psi_map pair length must match the lattice rank");
    add_outer(m, -1, u, gram_times(l, a));
  }
  return m;
}

Isometry eichler_siegel(const Lattice& l, const Vector& u, const Vector& a) {
  if (pairing(l, u, u) != 0) throw NotIsotropic("eichler_siegel requires <u,u> = 0");
  if (pairing(l, a, u) != 0) throw NotOrthogonal("eichler_siegel requires <a,u> = 0");

  const std::vector<Int> gu = gram_times(l, u);
  const std::vector<Int> ga = gram_times(l, a);
  const Int half_norm = pairing(l, a, a) / 2;

  IntMatrix closed = IntMatrix::identity(l.rank());
  add_outer(closed, 1, a, gu);
  add_outer(closed, -1, u, ga);
  add_outer(closed, -half_norm, u, gu);

  // Factorized definition: psi((half_norm*u - a) (x) u) * psi(u (x) a).
  const IntMatrix left = psi_map(l, {{u.scaled(half_norm) - a, u}});
  const IntMatrix right = psi_map(l, {{u, a}});
  if (closed != left * right)
    throw NotAnIsometry("Eichler-Siegel closed form disagrees with its factorization");

  return Isometry(l, std::move(closed));
}

Isometry compose(const Isometry& f, const Isometry& g) {
  if (f.lattice().gram() != g.lattice().gram())
    throw LatticeMismatch("cannot compose isometries of different lattices");
  return Isometry(f.lattice(), f.matrix() * g.matrix());
}

Isometry inverse(const Isometry& f) {
  return Isometry(f.lattice(), inverse_unimodular(f.matrix()));
}

IntPolynomial char_poly_reversed(const Isometry& f) {
  std::vector<Int> p = monic_char_poly(f.matrix());
  const Int p0 = p[0];
  if (p0 != 1 && p0 != -1) throw NotUnimodular("reversed char poly requires det = +-1");
  for (Int& c : p) c *= p0;
  return IntPolynomial(std::move(p));
}

}  // namespace starlat
