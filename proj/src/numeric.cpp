#include "rectchar/numeric.hpp"

#include <stdexcept>

namespace rectchar {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer falling_factorial(const Integer& n, long k) {
  if (k < 0) throw std::invalid_argument("falling factorial with negative length");
  Integer result = 1;
  for (long j = 0; j < k; ++j) result *= n - j;
  return result;
}

Rational falling_factorial(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("falling factorial with negative length");
  Rational result = 1;
  for (long j = 0; j < k; ++j) result *= x - j;
  return result;
}

Integer binomial(long n, long j) {
  if (j == 0) return 1;
  if (j < 0 || n < 0 || j > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return result;
}

Integer multichoose(long a, long b) {
  if (b == 0) return 1;
  return binomial(a + b - 1, b);
}

Integer catalan_number(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

Rational unit_inverse(const Rational& value) {
  if (sgn(value) == 0) throw std::domain_error("zero is not invertible");
  return 1 / value;
}

Integer unit_inverse(const Integer& value) {
  if (value == 1 || value == -1) return value;
  throw std::domain_error("integer " + value.get_str() + " is not a unit");
}

Rational divide_by(const Rational& value, long divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  return value / divisor;
}

}  // namespace rectchar
