#pragma once

#include <gmpxx.h>

#include <string>

namespace degbound {

// All bound formulas run on exact rationals; floating point is allowed only in
// diagnostic output and Monte Carlo estimates.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long long num, long long den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Falling factorial [x]_i = x (x-1) ... (x-i+1), with [x]_0 = 1.
BigInt falling_factorial(const BigInt& x, long long i);
inline BigInt falling_factorial(long long x, long long i) { return falling_factorial(BigInt(static_cast<long>(x)), i); }

// Largest integer <= q.
BigInt floor_rational(const Rational& q);
long long floor_to_ll(const Rational& q);

// "num/den" in lowest terms ("num" when den == 1).
std::string rational_to_string(const Rational& q);

// Parses "num/den" or "num". Throws Error{parse_error} on malformed input.
Rational rational_from_string(const std::string& s);

// Exact decimal rendering with the given number of significant digits.
// Uses plain notation for moderate magnitudes and e-notation otherwise.
std::string rational_to_decimal(const Rational& q, int significant_digits = 12);

}  // namespace degbound
