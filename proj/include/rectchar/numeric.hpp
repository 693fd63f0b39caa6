#pragma once

#include <gmpxx.h>

#include <string>

namespace rectchar {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

/// (n)_k = n(n-1)...(n-k+1); (n)_0 = 1.
Integer falling_factorial(const Integer& n, long k);
Rational falling_factorial(const Rational& x, long k);

/// Binomial coefficient with C(n,0) = 1 for every n and C(n,j) = 0 when
/// j < 0, n < 0 < j, or j > n >= 0.
Integer binomial(long n, long j);

/// ((a,b)) = C(a+b-1, b), the number of b-multisets from an a-set.
Integer multichoose(long a, long b);

Integer catalan_number(long n);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// num/den in canonical form. GMP requires canonical operands.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

// Ring helpers used by the templated series types. Overloads for polynomial
// coefficients live next to MultivarPoly.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Integer& value) { return sgn(value) == 0; }

/// Multiplicative inverse; throws std::domain_error for non-units.
Rational unit_inverse(const Rational& value);
Integer unit_inverse(const Integer& value);

/// Exact division by a nonzero integer (the field case).
Rational divide_by(const Rational& value, long divisor);

}  // namespace rectchar
