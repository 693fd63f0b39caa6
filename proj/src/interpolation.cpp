#include "rectchar/interpolation.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rectchar/character.hpp"
#include "rectchar/parallel.hpp"

namespace rectchar {

namespace {

// Monomial coefficients of the Newton interpolant through (x_i, y_i).
std::vector<Rational> interpolate_1d(const std::vector<Rational>& x, std::vector<Rational> y) {
  const std::size_t n = x.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - level]);
    }
  }
  // Horner in Newton form: c_{n-1}, then multiply by (x - x_j) and add c_j.
  std::vector<Rational> poly{y[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= x[j] * poly[e];
    }
    next[0] += y[j];
    poly = std::move(next);
  }
  return poly;
}

int admissible_offset(int m, int k) { return std::max(1, k - (m - 1) * (k + 2)); }

}  // namespace

RatPoly newton_tensor_interpolate(const std::vector<std::vector<Rational>>& nodes, const std::vector<Rational>& values) {
  const int nvars = static_cast<int>(nodes.size());
  std::size_t total = 1;
  for (const auto& axis : nodes) {
    if (axis.empty()) throw std::invalid_argument("empty interpolation axis");
    for (std::size_t a = 0; a < axis.size(); ++a) {
      for (std::size_t b = a + 1; b < axis.size(); ++b) {
        if (axis[a] == axis[b]) throw std::invalid_argument("repeated interpolation node");
      }
    }
    total *= axis.size();
  }
  if (values.size() != total) throw std::invalid_argument("value count does not match the grid");

  // Convert one axis at a time from values to monomial coefficients.
  std::vector<Rational> data = values;
  std::size_t stride = total;
  for (int v = 0; v < nvars; ++v) {
    const std::size_t n = nodes[static_cast<std::size_t>(v)].size();
    stride /= n;
    const std::size_t block = n * stride;
    for (std::size_t outer = 0; outer < total; outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        std::vector<Rational> fiber(n);
        for (std::size_t t = 0; t < n; ++t) fiber[t] = data[outer + t * stride + inner];
        const auto coeffs = interpolate_1d(nodes[static_cast<std::size_t>(v)], std::move(fiber));
        for (std::size_t t = 0; t < n; ++t) data[outer + t * stride + inner] = coeffs[t];
      }
    }
  }

  std::vector<RatPoly::Term> terms;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (sgn(data[idx]) == 0) continue;
    Exponents e{};
    std::size_t rest = idx;
    for (int v = nvars - 1; v >= 0; --v) {
      const std::size_t n = nodes[static_cast<std::size_t>(v)].size();
      e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rest % n);
      rest /= n;
    }
    terms.push_back({e, data[idx]});
  }
  return RatPoly::from_terms(nvars, std::move(terms));
}

std::vector<std::vector<Rational>> conjecture_grid(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m and k must be positive");
  const int n = k + 2;
  const int offset = admissible_offset(m, k);
  std::vector<std::vector<Rational>> nodes;
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> axis;
    for (int t = 1; t <= n; ++t) axis.emplace_back(t);
    nodes.push_back(std::move(axis));
  }
  for (int i = 1; i <= m; ++i) {
    std::vector<Rational> axis;
    for (int t = 0; t < n; ++t) axis.emplace_back((m - i) * n + offset + t);
    nodes.push_back(std::move(axis));
  }
  return nodes;
}

namespace {

MultiRectShape shape_at(const std::vector<Integer>& point, int m) {
  MultiRectShape shape;
  for (int i = 0; i < m; ++i) {
    shape.heights.push_back(static_cast<int>(point[static_cast<std::size_t>(i)].get_si()));
    shape.widths.push_back(static_cast<int>(point[static_cast<std::size_t>(m + i)].get_si()));
  }
  return shape;
}

}  // namespace

RatPoly f_mu_interpolate_rational(int m, const Partition& mu) {
  const int k = mu.size();
  const auto nodes = conjecture_grid(m, k);
  const int nvars = 2 * m;
  std::size_t total = 1;
  for (const auto& axis : nodes) total *= axis.size();

  std::vector<Rational> values(total);
  parallel_for(total, [&](std::size_t idx) {
    std::vector<Integer> point(static_cast<std::size_t>(nvars));
    std::size_t rest = idx;
    for (int v = nvars - 1; v >= 0; --v) {
      const auto& axis = nodes[static_cast<std::size_t>(v)];
      point[static_cast<std::size_t>(v)] = axis[rest % axis.size()].get_num();
      rest /= axis.size();
    }
    values[idx] = normalized_character(to_partition(shape_at(point, m)), mu);
  });

  RatPoly poly = newton_tensor_interpolate(nodes, values);
  // kappa(u) + kappa(v) <= k + kappa(w) bounds the degree by k + l(mu).
  if (poly.total_degree() > k + mu.length()) {
    throw InterpolationError("interpolated F_" + mu.to_string() + " has total degree " +
                             std::to_string(poly.total_degree()) + " > |mu| + l(mu)");
  }
  return poly;
}

IntPoly f_mu_interpolate(int m, const Partition& mu) {
  const RatPoly poly = f_mu_interpolate_rational(m, mu);
  auto integral = to_integer_poly(poly);
  if (!integral) throw InterpolationError("interpolated F_" + mu.to_string() + " has a non-integer coefficient");
  return *integral;
}

FidelityReport interpolation_fidelity(int m, const Partition& mu, const RatPoly& poly, int samples,
                                      std::uint64_t seed) {
  const int k = mu.size();
  const auto nodes = conjecture_grid(m, k);
  auto on_grid = [&](const std::vector<Integer>& point) {
    for (std::size_t v = 0; v < point.size(); ++v) {
      const auto& axis = nodes[v];
      if (std::find(axis.begin(), axis.end(), Rational(point[v])) == axis.end()) return false;
    }
    return true;
  };

  std::mt19937_64 rng(seed);
  const int max_height = k + 6;
  const int max_width = m * (k + 2) + k + 6;
  std::uniform_int_distribution<int> height(1, max_height);
  std::uniform_int_distribution<int> width(1, max_width);

  FidelityReport report;
  while (report.samples < samples) {
    MultiRectShape shape;
    std::set<int, std::greater<>> widths;
    while (static_cast<int>(widths.size()) < m) widths.insert(width(rng));
    for (int i = 0; i < m; ++i) shape.heights.push_back(height(rng));
    shape.widths.assign(widths.begin(), widths.end());
    const std::vector<Integer> point = shape.as_point();
    if (shape.size() < k || on_grid(point)) continue;
    ++report.samples;
    const Rational expected = normalized_character(to_partition(shape), mu);
    std::vector<Rational> rational_point(point.begin(), point.end());
    if (poly.evaluate<Rational>(rational_point) != expected) {
      ++report.mismatches;
      std::string where;
      for (int h : shape.heights) where += (where.empty() ? "" : ",") + std::to_string(h);
      where += ";";
      for (std::size_t i = 0; i < shape.widths.size(); ++i) {
        where += (i == 0 ? "" : ",") + std::to_string(shape.widths[i]);
      }
      report.failures.push_back(where);
    }
  }
  return report;
}

ConjectureReport conjecture1_check(int m, const Partition& mu) {
  const int k = mu.size();
  ConjectureReport report;
  report.m = m;
  report.mu = mu;
  report.polynomial = f_mu_interpolate_rational(m, mu);
  report.flipped = flip_signs(report.polynomial, k);
  report.integer_coefficients = to_integer_poly(report.polynomial).has_value();
  report.nonnegative = std::all_of(report.flipped.terms().begin(), report.flipped.terms().end(),
                                   [](const auto& t) { return sgn(t.coefficient) >= 0; });
  report.coefficient_sum = report.flipped.coefficient_sum();
  report.expected_sum = falling_factorial(Integer(k + m - 1), k);
  report.sum_matches = report.coefficient_sum == Rational(report.expected_sum);
  return report;
}

}  // namespace rectchar
