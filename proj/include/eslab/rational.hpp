#pragma once

// Exact scalar type: arbitrary-precision rationals kept in canonical form
// (reduced, positive denominator). GMP guarantees canonical form after
// arithmetic; parsing goes through an explicit canonicalize step.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eslab {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse "num" or "num/den" (base 10, optional leading '-' on num).
Rational parse_rational(const std::string& text);

/// Canonical form: "num" when den == 1, else "num/den".
std::string format_rational(const Rational& value);

/// 2^exp as an exact rational; exp may be negative.
Rational pow2(long exp);

/// q^exp for integer exp >= 0.
Rational rational_pow(const Rational& base, unsigned long exp);

inline int sign_of(const Rational& value) { return sgn(value); }

/// Floor of the k-th root: r with r^k <= n < (r+1)^k. Requires n >= 0, k >= 1.
Integer floor_root(const Integer& n, unsigned long k);

/// Floor of log2(n) for n >= 1.
unsigned long floor_log2(const Integer& n);

/// Smallest integer >= (p/q) * sqrt(v), for p, q > 0, v >= 0.
Integer ceil_rational_times_sqrt(const Integer& p, const Integer& q, const Integer& v);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(const Integer& n, unsigned long k);

}  // namespace eslab
