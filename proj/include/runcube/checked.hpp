#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace runcube {

// All counting in this library is exact. Overflow of the 64-bit coefficient
// type is an error, never a silent wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error(std::string("integer overflow in ") + what);
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error(std::string("integer overflow in ") + what);
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error(std::string("integer overflow in ") + what);
  return r;
}

// f(0) = 0, f(1) = 1, f(n) = f(n-1) + f(n-2).
inline std::int64_t fib(int n) {
  if (n < 0) throw std::domain_error("fib: negative index");
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    std::int64_t next = checked_add(a, b, "fib");
    a = b;
    b = next;
  }
  return a;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is always divisible by i here
    r = checked_mul(r, n - k + i, "binomial") / i;
  }
  return r;
}

}  // namespace runcube
