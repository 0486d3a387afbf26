#pragma once

#include <cstdint>

#include "partpat/error.hpp"

namespace partpat {

using count_t = std::uint64_t;

inline count_t add_checked(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline count_t mul_checked(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

}  // namespace partpat
