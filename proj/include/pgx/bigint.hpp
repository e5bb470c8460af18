#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pgx {

// Exact integer type for all subgroup counts. Desk-scale groups stay well
// inside 64 bits, but Gaussian binomials at p = 5, n = 12 do not.
using BigInt = boost::multiprecision::cpp_int;

inline std::string dec(const BigInt& v) { return v.str(); }

inline BigInt big_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace pgx
