#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "nsdelta/error.hpp"

namespace nsdelta {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::overflow,
                "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::overflow,
                "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline Int checked_lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

// Ceiling of num/den for den > 0.
inline Int ceil_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num > 0) == (den > 0))) ++q;
  return q;
}

inline Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num > 0) != (den > 0))) --q;
  return q;
}

// Inverse of a modulo m in [0, m), or 0 when m == 1. Requires gcd(a, m) == 1.
Int mod_inverse(Int a, Int m);

}  // namespace nsdelta
