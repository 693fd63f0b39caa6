#pragma once

#include <vector>

#include "rectchar/multivar_poly.hpp"
#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

namespace rectchar {

/// A staircase of m rectangles: heights[i] rows of length widths[i], with
/// widths strictly decreasing. Heights are p_1..p_m and widths q_1..q_m.
struct MultiRectShape {
  std::vector<int> heights;
  std::vector<int> widths;

  int rectangles() const { return static_cast<int>(heights.size()); }
  int size() const;

  /// Throws std::invalid_argument unless heights and widths are positive,
  /// equally long, and the widths strictly decrease.
  void validate() const;

  /// (p_1, ..., p_m, q_1, ..., q_m), the variable order of F_k and F_mu.
  std::vector<Integer> as_point() const;
};

Partition to_partition(const MultiRectShape& shape);

/// Normalized character at a k-cycle from the residue at infinity of
/// (x)_k phi(x - k) / phi(x), phi(x) = prod_i (x - lambda_i - r + i).
Rational frobenius_normalized(const Partition& shape, int k);

/// [x^{-1}] of (x)_k prod_i (x - A_i)_k / (x - B_i)_k with
/// A_i = q_i + p_i + ... + p_m and B_i = q_i + p_{i+1} + ... + p_m.
IntPoly f_k_residue(int m, int k);

/// F_k(p_1..p_m; q_1..q_m) = -(1/k) f_k_residue(m, k). Throws
/// std::domain_error if the residue is not divisible by k.
IntPoly f_k_polynomial(int m, int k);

/// (-1)^k F(p_1..p_m; -q_1..-q_m) for a polynomial in 2m variables.
IntPoly flip_signs(const IntPoly& poly, int k);
RatPoly flip_signs(const RatPoly& poly, int k);

/// (-1)^k F_k(1..1; -1..-1).
Integer f_k_special_value(int m, int k);

/// Every coefficient of the residue (that is, of k F_k) is divisible by k.
bool integrality_witness(int m, int k);

}  // namespace rectchar
