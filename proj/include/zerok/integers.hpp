#pragma once

// Arbitrary-precision integers and rationals used throughout the library.
// Entries of boundary matrices, chain coefficients and invariant factors are
// all exact; nothing in this project ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zerok {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace zerok
