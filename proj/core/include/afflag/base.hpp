#pragma once

#include <cstdint>
#include <stdexcept>

namespace afflag {

// All coefficient and window arithmetic uses 64-bit integers with overflow
// checks that abort loudly instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Floor division, b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Representative of a mod b in [0, b), b > 0.
inline Int pos_mod(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

// Representative of a mod n in {1, ..., n}.
inline Int residue1(Int a, Int n) { return pos_mod(a - 1, n) + 1; }

}  // namespace afflag
