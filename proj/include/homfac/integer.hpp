#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homfac {

using Integer = mpz_class;
using Rational = mpq_class;

/// Checked addition for exponent arithmetic.
inline int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow");
  }
  return r;
}

inline int checked_mul(int a, int b) {
  int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("exponent overflow");
  }
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace homfac
