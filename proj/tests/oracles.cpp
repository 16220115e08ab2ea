#include "oracles.hpp"

#include <stdexcept>
#include <utility>

namespace oracles {

namespace {

// #{(a_1..a_m) >= 0 : sum a_i w_i == k} for every k in [0, kmax].
std::vector<Int> monomial_counts(const std::vector<long long>& weights, long long kmax) {
  std::vector<Int> count(static_cast<std::size_t>(kmax) + 1, 0);
  count[0] = 1;
  for (long long w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (long long k = w; k <= kmax; ++k) {
      count[static_cast<std::size_t>(k)] += count[static_cast<std::size_t>(k - w)];
    }
  }
  return count;
}

}  // namespace

std::vector<Int> weighted_graded_dims(const std::vector<long long>& weights,
                                      long long relation_degree,
                                      long long kmax) {
  const std::vector<Int> count = monomial_counts(weights, kmax);
  std::vector<Int> dims(static_cast<std::size_t>(kmax) + 1, 0);
  for (long long k = 0; k <= kmax; ++k) {
    dims[static_cast<std::size_t>(k)] = count[static_cast<std::size_t>(k)];
    if (k >= relation_degree) {
      dims[static_cast<std::size_t>(k)] -= count[static_cast<std::size_t>(k - relation_degree)];
    }
  }
  return dims;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfState {
  std::vector<std::vector<Int>> a;   // working matrix, r x c
  std::vector<std::vector<Int>> v;   // accumulated right transform, c x c
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  }
  void add_row(std::size_t dst, std::size_t src, const Int& q) {  // row dst += q * row src
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += q * a[src][c];
  }
  void add_col(std::size_t dst, std::size_t src, const Int& q) {  // col dst += q * col src
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] += q * a[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] += q * v[r][src];
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows; ++r) a[r][c] = -a[r][c];
    for (std::size_t r = 0; r < cols; ++r) v[r][c] = -v[r][c];
  }
};

}  // namespace

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> a,
                                         std::vector<std::vector<Int>>* right_transform) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  SnfState s;
  s.a = std::move(a);
  s.rows = rows;
  s.cols = cols;
  s.v.assign(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) s.v[i][i] = 1;

  const std::size_t t = rows < cols ? rows : cols;
  for (std::size_t p = 0; p < t; ++p) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pi = p, pj = p;
      bool found = false;
      for (std::size_t i = p; i < rows; ++i) {
        for (std::size_t j = p; j < cols; ++j) {
          if (s.a[i][j] != 0 && (!found || abs_int(s.a[i][j]) < abs_int(s.a[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) break;
      if (pi != p) s.swap_rows(p, pi);
      if (pj != p) s.swap_cols(p, pj);

      bool dirty = false;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (s.a[i][p] != 0) {
          Int q = s.a[i][p] / s.a[p][p];
          s.add_row(i, p, -q);
          if (s.a[i][p] != 0) dirty = true;
        }
      }
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (s.a[p][j] != 0) {
          Int q = s.a[p][j] / s.a[p][p];
          s.add_col(j, p, -q);
          if (s.a[p][j] != 0) dirty = true;
        }
      }
      if (dirty) continue;

      // Divisibility sweep so d_p | d_{p+1} eventually.
      bool divides_all = true;
      for (std::size_t i = p + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = p + 1; j < cols; ++j) {
          if (s.a[i][j] % s.a[p][p] != 0) {
            s.add_row(p, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (s.a[p][p] < 0) s.negate_col(p);
  }

  std::vector<Int> divisors;
  for (std::size_t p = 0; p < t; ++p) divisors.push_back(s.a[p][p]);
  if (right_transform != nullptr) *right_transform = s.v;
  return divisors;
}

std::vector<std::vector<Int>> integer_kernel_snf(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Int>> v;
  std::vector<Int> divisors = smith_invariant_factors(a, &v);
  std::vector<std::vector<Int>> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    const bool zero_divisor = j >= divisors.size() || divisors[j] == 0;
    if (!zero_divisor) continue;
    std::vector<Int> column(n);
    for (std::size_t r = 0; r < n; ++r) column[r] = v[r][j];
    kernel.push_back(std::move(column));
  }
  return kernel;
}

}  // namespace oracles
