#pragma once

#include <stdexcept>
#include <string>

namespace extremis {

/// Exact count of maximum independent sets. 128 bits is far beyond any value
/// reachable for graphs of order <= 62; arithmetic that would wrap throws.
using Count = unsigned __int128;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow in multiplication");
  return r;
}

inline Count checked_pow(Count base, unsigned exponent) {
  Count r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

}  // namespace extremis
