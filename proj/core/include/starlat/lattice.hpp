#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starlat/matrix.hpp"
#include "starlat/numeric.hpp"

namespace starlat {

// Coordinate vector in a lattice basis.
struct Vector {
  std::vector<Int> coords;

  Vector() = default;
  explicit Vector(std::vector<Int> c) : coords(std::move(c)) {}

  static Vector zero(std::size_t rank) { return Vector(std::vector<Int>(rank, 0)); }
  static Vector unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return coords.size(); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  Vector scaled(const Int& s) const;

  bool operator==(const Vector&) const = default;

  std::string str() const;  // "(1, 0, -2)"
};

Vector apply(const IntMatrix& m, const Vector& v);

// Even integral lattice given by a symmetric Gram matrix with even diagonal.
// Labels name the basis vectors in reports; they carry no semantics.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);  // labels default to b1, b2, ...
  Lattice(IntMatrix gram, std::vector<std::string> labels);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector basis_vector(std::size_t i) const { return Vector::unit(rank(), i); }

  bool operator==(const Lattice&) const = default;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

Int pairing(const Lattice& l, const Vector& x, const Vector& y);
bool is_root(const Lattice& l, const Vector& a);  // <a,a> = -2
Lattice orthogonal_sum(const Lattice& a, const Lattice& b);
Lattice hyperbolic_plane();  // basis u, w with <u,w> = 1, <u,u> = <w,w> = 0

// Integral basis of {x : <x,y> = 0 for all y}, saturated (any integer kernel
// vector is an integer combination of the returned ones). Empty iff the Gram
// matrix is nondegenerate.
std::vector<Vector> radical_basis(const Lattice& l);

}  // namespace starlat
