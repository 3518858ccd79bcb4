#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rigidbound {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// 2^k as an arbitrary-precision integer.
inline BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace rigidbound
