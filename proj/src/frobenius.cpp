#include "rectchar/frobenius.hpp"

#include <numeric>
#include <stdexcept>

#include "rectchar/laurent_series.hpp"

namespace rectchar {

int MultiRectShape::size() const {
  int n = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) n += heights[i] * widths[i];
  return n;
}

void MultiRectShape::validate() const {
  if (heights.empty() || heights.size() != widths.size()) {
    throw std::invalid_argument("a multi-rectangle shape needs m >= 1 heights and widths");
  }
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] <= 0 || widths[i] <= 0) throw std::invalid_argument("rectangle sides must be positive");
    if (i > 0 && widths[i] >= widths[i - 1]) throw std::invalid_argument("rectangle widths must strictly decrease");
  }
}

std::vector<Integer> MultiRectShape::as_point() const {
  std::vector<Integer> point;
  for (int p : heights) point.emplace_back(p);
  for (int q : widths) point.emplace_back(q);
  return point;
}

Partition to_partition(const MultiRectShape& shape) {
  shape.validate();
  std::vector<int> parts;
  for (std::size_t i = 0; i < shape.heights.size(); ++i) {
    parts.insert(parts.end(), static_cast<std::size_t>(shape.heights[i]), shape.widths[i]);
  }
  return Partition(std::move(parts));
}

namespace {

// Ascending coefficients of prod (x - root).
std::vector<Rational> polynomial_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> coeffs{Rational(1)};
  for (const Rational& root : roots) {
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= root * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

Rational frobenius_normalized(const Partition& shape, int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  if (k > shape.size()) throw std::invalid_argument("cycle longer than the shape");
  const int r = shape.length();
  std::vector<Rational> numerator_roots;
  std::vector<Rational> denominator_roots;
  for (int j = 0; j < k; ++j) numerator_roots.emplace_back(j);
  for (int i = 1; i <= r; ++i) {
    const int shifted = shape.row(i) + r - i;
    numerator_roots.emplace_back(shifted + k);
    denominator_roots.emplace_back(shifted);
  }
  const Rational residue =
      rational_function_coefficient(polynomial_from_roots(numerator_roots), denominator_roots, -1, Rational(0));
  return -residue / k;
}

IntPoly f_k_residue(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m and k must be positive");
  const int nvars = 2 * m;
  const IntPoly zero(nvars);
  auto p = [&](int i) { return IntPoly::variable(nvars, i - 1); };
  auto q = [&](int i) { return IntPoly::variable(nvars, m + i - 1); };

  auto series = LaurentSeries<IntPoly>::polynomial({IntPoly(nvars, Integer(1))}, zero);
  for (int j = 0; j < k; ++j) series = series.multiply_linear(IntPoly(nvars, Integer(j)));

  // Each numerator factor is applied right before its denominator partner,
  // which keeps the window at [x^{-1}, x^k] throughout.
  for (int i = 1; i <= m; ++i) {
    IntPoly tail(nvars);
    for (int l = i + 1; l <= m; ++l) tail += p(l);
    const IntPoly upper = q(i) + p(i) + tail;
    const IntPoly lower = q(i) + tail;
    for (int j = 0; j < k; ++j) {
      const IntPoly shift(nvars, Integer(j));
      series = series.multiply_linear(upper + shift);
      series = series.divide_linear(lower + shift, -1);
    }
  }
  return series.coefficient(-1);
}

IntPoly f_k_polynomial(int m, int k) { return divide_exact(-f_k_residue(m, k), Integer(k)); }

namespace {

std::vector<int> second_half(int nvars) {
  std::vector<int> indices(static_cast<std::size_t>(nvars / 2));
  std::iota(indices.begin(), indices.end(), nvars / 2);
  return indices;
}

}  // namespace

IntPoly flip_signs(const IntPoly& poly, int k) {
  IntPoly out = poly.negate_variables(second_half(poly.variables()));
  return k % 2 == 0 ? out : -out;
}

RatPoly flip_signs(const RatPoly& poly, int k) {
  RatPoly out = poly.negate_variables(second_half(poly.variables()));
  return k % 2 == 0 ? out : -out;
}

Integer f_k_special_value(int m, int k) {
  std::vector<Integer> point;
  for (int i = 0; i < m; ++i) point.emplace_back(1);
  for (int i = 0; i < m; ++i) point.emplace_back(-1);
  Integer value = f_k_polynomial(m, k).evaluate<Integer>(point);
  return k % 2 == 0 ? value : Integer(-value);
}

bool integrality_witness(int m, int k) { return all_coefficients_divisible(f_k_residue(m, k), Integer(k)); }

}  // namespace rectchar
