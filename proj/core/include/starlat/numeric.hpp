#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace starlat {

// Exact scalars used throughout; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

}  // namespace starlat
