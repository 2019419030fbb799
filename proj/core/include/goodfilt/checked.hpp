#pragma once

#include <cstdint>

#include "goodfilt/errors.hpp"

namespace goodfilt {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic.  All character/multiplicity math in the
// library goes through these helpers so that a result that no longer fits is
// reported as OverflowError instead of silently wrapping.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a*b + c, checked at both steps.
inline Int mul_add(Int a, Int b, Int c) { return add(mul(a, b), c); }

// Exact power; throws OverflowError if p^e does not fit.
inline Int pow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p-adic valuation of m; requires p >= 2 and m != 0.
inline Int padic_valuation(Int p, Int m) {
  Int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace goodfilt
