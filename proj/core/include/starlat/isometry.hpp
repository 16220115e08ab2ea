#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "starlat/lattice.hpp"
#include "starlat/matrix.hpp"
#include "starlat/polynomial.hpp"

namespace starlat {

// Lattice isometry as an exact integer matrix; column j is the image of
// basis vector j. Construction checks M^T G M = G and det M = +-1.
class Isometry {
 public:
  Isometry(Lattice lattice, IntMatrix matrix);

  static Isometry identity(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  Int det() const { return det_; }

  Vector operator()(const Vector& v) const { return apply(matrix_, v); }

  bool operator==(const Isometry&) const = default;

 private:
  Lattice lattice_;
  IntMatrix matrix_;
  Int det_;
};

// v -> v + <v,a>a for a root a (<a,a> = -2); an involution.
Isometry reflection(const Lattice& l, const Vector& a);

// v -> v - sum_i <v, a_i> u_i for the given (u_i, a_i) pairs. This is an
// endomorphism, not an isometry in general, hence the bare matrix.
IntMatrix psi_map(const Lattice& l, const std::vector<std::pair<Vector, Vector>>& pairs);

// Eichler-Siegel transformation for isotropic u orthogonal to a:
//   x -> x + <x,u>a - <x,a>u - (<a,a>/2)<x,u>u.
// Also evaluated through its psi_map factorization; the two must agree.
Isometry eichler_siegel(const Lattice& l, const Vector& u, const Vector& a);

// (f o g)(x) = f(g(x)); matrix product f.matrix * g.matrix. Products written
// A*B*C throughout this library apply C first (right-to-left).
Isometry compose(const Isometry& f, const Isometry& g);

Isometry inverse(const Isometry& f);

// det(1 - f^{-1} t) as an exact integer polynomial: constant term 1, degree
// at most the rank. Computed over the integers as p(0)*p(t) with
// p(t) = det(tI - M), using det M = +-1.
IntPolynomial char_poly_reversed(const Isometry& f);

}  // namespace starlat
