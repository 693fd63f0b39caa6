#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectchar/frobenius.hpp"
#include "rectchar/multivar_poly.hpp"
#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

namespace rectchar {

/// The interpolated values are inconsistent with the assumed degree bound.
class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique polynomial with degree < nodes[v].size() in each variable v that
/// takes values[idx] at the grid point idx. `values` is row-major with the
/// last variable varying fastest. Nodes in each variable must be distinct.
RatPoly newton_tensor_interpolate(const std::vector<std::vector<Rational>>& nodes, const std::vector<Rational>& values);

/// Interpolation nodes for F_mu with |mu| = k: p_i in {1..k+2} and q_i in the
/// i-th of m disjoint descending bands of k+2 consecutive integers.
std::vector<std::vector<Rational>> conjecture_grid(int m, int k);

/// F_mu over the rationals, from normalized characters on conjecture_grid.
/// Throws InterpolationError if the total degree exceeds |mu| + l(mu).
RatPoly f_mu_interpolate_rational(int m, const Partition& mu);

/// As above, and throws InterpolationError on a non-integer coefficient.
IntPoly f_mu_interpolate(int m, const Partition& mu);

/// Evaluation of an interpolated F_mu against normalized characters at
/// random shapes that are not grid nodes.
struct FidelityReport {
  int samples = 0;
  int mismatches = 0;
  std::vector<std::string> failures;  // "heights;widths" of each mismatch
};

FidelityReport interpolation_fidelity(int m, const Partition& mu, const RatPoly& poly, int samples,
                                      std::uint64_t seed);

struct ConjectureReport {
  int m = 0;
  Partition mu;
  RatPoly polynomial{1};  // F_mu
  RatPoly flipped{1};     // (-1)^k F_mu(p; -q)
  bool integer_coefficients = false;
  bool nonnegative = false;
  Rational coefficient_sum;
  Integer expected_sum;  // (k + m - 1)_k
  bool sum_matches = false;

  bool passed() const { return integer_coefficients && nonnegative && sum_matches; }
};

ConjectureReport conjecture1_check(int m, const Partition& mu);

}  // namespace rectchar
