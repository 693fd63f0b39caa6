#pragma once

#include <vector>

#include "rectchar/multivar_poly.hpp"
#include "rectchar/numeric.hpp"

namespace rectchar {

/// G_k: the total-degree-(k+1) part of f_k_polynomial(m, k).
IntPoly g_k_leading(int m, int k);

/// -(1/k) [x^{k+1}] M(x)^k with M(x) = prod_i (1 - A_i x) / (1 - B_i x).
IntPoly g_k_via_lagrange(int m, int k);

/// Coefficients c_0..c_kmax of 1/x + sum_k c_k x^k = 1/g, where g is the
/// compositional inverse of x prod_i (1 - B_i x) / (1 - A_i x). `lower` holds
/// the B_i and `upper` the A_i. Throws if the 1/x coefficient is not 1.
std::vector<RatPoly> gk_generating_series(const std::vector<RatPoly>& upper, const std::vector<RatPoly>& lower,
                                          int kmax);

/// The generating-series coefficients equal G_1..G_kmax.
bool gk_generating_check(int m, int kmax);

/// S_1..S_kmax with S_k = (-1)^k G_k(1..1; -1..-1).
std::vector<Integer> s_k_sequence(int m, int kmax);

/// S_1..S_kmax from -1/x + sum S_k x^k = -1/h, h the compositional inverse of
/// x (1 - x) / (1 + (m - 1) x).
std::vector<Integer> s_k_via_inverse(int m, int kmax);

/// (1/k) C(k, i) C(k, i - 1).
Integer narayana_number(int k, int i);

/// For m = 1 and every k <= kmax, (-1)^k G_k(p; -q) = sum_i N(k, i) p^{k+1-i} q^i.
bool narayana_check(int kmax);

/// The closed-form sum for (-1)^k G_k(p_1..p_m; -q_1..-q_m). Rational because
/// of the 1/k prefactor; integral whenever the formula is right.
RatPoly elizalde_formula(int m, int k);

}  // namespace rectchar
