#pragma once

// Test-only oracles, kept independent of the library code paths they check.
// Only the scalar types are shared with the library.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starlat/numeric.hpp"

namespace oracles {

using starlat::Int;

// Dimensions of the graded pieces of k[x,y,z]/(f) where the variables carry
// the given positive weights and f is a single relation of degree
// relation_degree: dim_k = #{monomials of weighted degree k}
//                        - #{monomials of weighted degree k - relation_degree}.
// Brute-force lattice point count, no generating functions.
std::vector<Int> weighted_graded_dims(const std::vector<long long>& weights,
                                      long long relation_degree,
                                      long long kmax);

// Smith normal form of an integer matrix (given row-major); returns the
// invariant factors d_1 | d_2 | ... (nonnegative, zeros last) and, through
// right_transform, a unimodular V with U*A*V diagonal.
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> a,
                                         std::vector<std::vector<Int>>* right_transform = nullptr);

// Saturated integer kernel of a square matrix, via the Smith normal form
// right transform: the columns of V sitting over zero invariant factors.
// Each returned entry is one kernel basis vector (length n).
std::vector<std::vector<Int>> integer_kernel_snf(const std::vector<std::vector<Int>>& a);

}  // namespace oracles
