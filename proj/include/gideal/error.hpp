#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with different variable counts.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A checked 64-bit exponent or count computation overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero ideal, infinite
/// colength, ideal outside the required class, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// binom(n, k) with overflow detection; zero when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    std::int64_t num = mul(r, n - k + i);
    r = num / i;
  }
  return r;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

}  // namespace checked
}  // namespace gideal
