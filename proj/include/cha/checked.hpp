#pragma once

#include <cstdint>
#include <stdexcept>

namespace cha {

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All coefficient arithmetic goes through these; silent wraparound is
// never acceptable for exact combinatorial counts.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace cha
