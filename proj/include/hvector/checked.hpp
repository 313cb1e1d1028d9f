#ifndef HVECTOR_CHECKED_HPP
#define HVECTOR_CHECKED_HPP

#include <cstdint>

#include "hvector/error.hpp"

namespace hvector {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// acc += a * b
inline void checked_fma(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  acc = checked_add(acc, checked_mul(a, b));
}

}  // namespace hvector

#endif  // HVECTOR_CHECKED_HPP
