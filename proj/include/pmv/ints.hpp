#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmv {

using Int = std::int64_t;

// All coordinate arithmetic is exact: any 64-bit overflow is a hard failure,
// never a silent wraparound.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer add overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer sub overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer mul overflow");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace pmv
