#include "starlat/lattice.hpp"

#include <sstream>
#include <utility>

#include "starlat/errors.hpp"

namespace starlat {

Vector Vector::unit(std::size_t rank, std::size_t index) {
  Vector v = zero(rank);
  v.coords.at(index) = 1;
  return v;
}

Vector Vector::operator-() const {
  Vector v = *this;
  for (Int& c : v.coords) c = -c;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  Vector v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
  Vector v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

Vector Vector::scaled(const Int& s) const {
  Vector v = *this;
  for (Int& c : v.coords) c *= s;
  return v;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords[i].str();
  }
  os << ")";
  return os.str();
}

Vector apply(const IntMatrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector length mismatch");
  Vector r = Vector::zero(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) r[i] += m.at(i, j) * v[j];
  }
  return r;
}

namespace {

std::vector<std::string> default_labels(std::size_t rank) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) labels.push_back("b" + std::to_string(i + 1));
  return labels;
}

void check_gram(const IntMatrix& gram, std::size_t label_count) {
  if (!gram.is_square()) throw InvalidLattice("Gram matrix must be square");
  if (!gram.is_symmetric()) throw InvalidLattice("Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (gram.at(i, i) % 2 != 0)
      throw InvalidLattice("Gram diagonal must be even (even lattice), offending index " +
                           std::to_string(i));
  }
  if (label_count != gram.rows()) throw InvalidLattice("label count must equal the rank");
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)), labels_(default_labels(gram_.rows())) {
  check_gram(gram_, labels_.size());
}

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  check_gram(gram_, labels_.size());
}

Int pairing(const Lattice& l, const Vector& x, const Vector& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw DimensionMismatch("pairing arguments must match the lattice rank");
  Int acc = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) row += l.gram().at(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

bool is_root(const Lattice& l, const Vector& a) { return pairing(l, a, a) == -2; }

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) gram.at(i, j) = a.gram().at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) gram.at(a.rank() + i, a.rank() + j) = b.gram().at(i, j);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return Lattice(std::move(gram), std::move(labels));
}

Lattice hyperbolic_plane() {
  IntMatrix gram(2, 2);
  gram.at(0, 1) = 1;
  gram.at(1, 0) = 1;
  return Lattice(std::move(gram), {"u", "w"});
}

// Unimodular row reduction of the Gram matrix; the transform rows that map to
// zero rows form a saturated basis of the kernel.
std::vector<Vector> radical_basis(const Lattice& l) {
  const std::size_t n = l.rank();
  IntMatrix a = l.gram();
  IntMatrix u = IntMatrix::identity(n);

  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(dst, j) -= q * a.at(src, j);
      u.at(dst, j) -= q * u.at(src, j);
    }
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a.at(i, c), a.at(j, c));
      std::swap(u.at(i, c), u.at(j, c));
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    for (;;) {
      // Smallest nonzero magnitude in this column at or below pivot_row.
      std::size_t best = n;
      for (std::size_t i = pivot_row; i < n; ++i) {
        if (a.at(i, col) == 0) continue;
        if (best == n || abs(a.at(i, col)) < abs(a.at(best, col))) best = i;
      }
      if (best == n) break;  // column exhausted
      if (best != pivot_row) row_swap(pivot_row, best);
      bool any_left = false;
      for (std::size_t i = pivot_row + 1; i < n; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(pivot_row, col);
        row_sub(i, pivot_row, q);
        if (a.at(i, col) != 0) any_left = true;
      }
      if (!any_left) {
        ++pivot_row;
        break;
      }
    }
  }

  std::vector<Vector> kernel;
  for (std::size_t i = pivot_row; i < n; ++i) {
    Vector v = Vector::zero(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = u.at(i, j);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace starlat
