#include "rectchar/leading_terms.hpp"

#include <functional>
#include <stdexcept>

#include "rectchar/frobenius.hpp"
#include "rectchar/power_series.hpp"

namespace rectchar {

namespace {

// A_i = q_i + p_i + ... + p_m and B_i = q_i + p_{i+1} + ... + p_m.
template <class Scalar>
void rectangle_corners(int m, std::vector<MultivarPoly<Scalar>>& upper, std::vector<MultivarPoly<Scalar>>& lower) {
  using Poly = MultivarPoly<Scalar>;
  const int nvars = 2 * m;
  upper.clear();
  lower.clear();
  for (int i = 1; i <= m; ++i) {
    Poly b = Poly::variable(nvars, m + i - 1);
    for (int l = i + 1; l <= m; ++l) b += Poly::variable(nvars, l - 1);
    upper.push_back(b + Poly::variable(nvars, i - 1));
    lower.push_back(b);
  }
}

void check_positive(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("m and k must be positive");
}

}  // namespace

IntPoly g_k_leading(int m, int k) {
  check_positive(m, k);
  return f_k_polynomial(m, k).homogeneous_part(k + 1);
}

IntPoly g_k_via_lagrange(int m, int k) {
  check_positive(m, k);
  std::vector<IntPoly> upper;
  std::vector<IntPoly> lower;
  rectangle_corners(m, upper, lower);
  const int order = k + 1;
  const IntPoly zero(2 * m);
  const IntPoly one(2 * m, Integer(1));
  auto kernel = PowerSeries<IntPoly>::constant(one, order);
  for (int i = 0; i < m; ++i) {
    const auto top = PowerSeries<IntPoly>({one, -upper[static_cast<std::size_t>(i)]}, order, zero);
    kernel = kernel * top * PowerSeries<IntPoly>::geometric(lower[static_cast<std::size_t>(i)], order);
  }
  const IntPoly c = kernel.pow(static_cast<unsigned>(k)).coefficient(k + 1);
  return divide_exact(-c, Integer(k));
}

std::vector<RatPoly> gk_generating_series(const std::vector<RatPoly>& upper, const std::vector<RatPoly>& lower,
                                          int kmax) {
  if (upper.size() != lower.size() || upper.empty()) throw std::invalid_argument("need m >= 1 matching corner lists");
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const int nvars = upper.front().variables();
  const RatPoly zero(nvars);
  const RatPoly one(nvars, Rational(1));
  const int order = kmax + 2;

  // f = x prod (1 - B_i x) / (1 - A_i x).
  auto f = PowerSeries<RatPoly>::x(order, zero);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    f = f * PowerSeries<RatPoly>({one, -lower[i]}, order, zero) * PowerSeries<RatPoly>::geometric(upper[i], order);
  }
  const auto g = f.compositional_inverse();
  // 1/g = (1/x) (1/u) with u = g / x.
  const PowerSeries<RatPoly> u(std::vector<RatPoly>(g.coefficients().begin() + 1, g.coefficients().end()), order - 1,
                               zero);
  const auto d = u.reciprocal();
  if (!(d.coefficient(0) == one)) throw std::logic_error("generating series lost its 1/x term");
  std::vector<RatPoly> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(d.coefficient(k + 1));
  return out;
}

bool gk_generating_check(int m, int kmax) {
  check_positive(m, kmax);
  std::vector<RatPoly> upper;
  std::vector<RatPoly> lower;
  rectangle_corners(m, upper, lower);
  const auto series = gk_generating_series(upper, lower, kmax);
  for (int k = 1; k <= kmax; ++k) {
    if (!(series[static_cast<std::size_t>(k)] == convert_coefficients<Rational>(g_k_leading(m, k)))) return false;
  }
  return true;
}

std::vector<Integer> s_k_sequence(int m, int kmax) {
  check_positive(m, kmax);
  std::vector<Integer> out;
  for (int k = 1; k <= kmax; ++k) out.push_back(flip_signs(g_k_leading(m, k), k).coefficient_sum());
  return out;
}

std::vector<Integer> s_k_via_inverse(int m, int kmax) {
  check_positive(m, kmax);
  const int order = kmax + 2;
  // x (1 - x) / (1 + (m - 1) x)
  auto f = PowerSeries<Rational>({Rational(0), Rational(1), Rational(-1)}, order, Rational(0)) *
           PowerSeries<Rational>::geometric(Rational(1 - m), order);
  const auto h = f.compositional_inverse();
  const PowerSeries<Rational> u(std::vector<Rational>(h.coefficients().begin() + 1, h.coefficients().end()), order - 1,
                                Rational(0));
  const auto d = u.reciprocal();
  std::vector<Integer> out;
  for (int k = 1; k <= kmax; ++k) {
    const Rational s = -d.coefficient(k + 1);
    if (!is_integral(s)) throw std::logic_error("non-integral S_k from the series route");
    out.push_back(s.get_num());
  }
  return out;
}

Integer narayana_number(int k, int i) {
  if (k < 1 || i < 1 || i > k) return Integer(0);
  return binomial(k, i) * binomial(k, i - 1) / k;
}

bool narayana_check(int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    IntPoly expected(2);
    for (int i = 1; i <= k; ++i) {
      Exponents e{};
      e[0] = static_cast<std::uint8_t>(k + 1 - i);
      e[1] = static_cast<std::uint8_t>(i);
      expected += IntPoly::monomial(2, e, narayana_number(k, i));
    }
    if (!(flip_signs(g_k_leading(1, k), k) == expected)) return false;
  }
  return true;
}

RatPoly elizalde_formula(int m, int k) {
  check_positive(m, k);
  const int nvars = 2 * m;
  std::vector<int> i(static_cast<std::size_t>(m));
  std::vector<int> j(static_cast<std::size_t>(m));
  RatPoly total(nvars);

  // Visit every (i_1..i_m, j_1..j_m) of nonnegative integers summing to k + 1.
  std::function<void(int, int)> visit = [&](int slot, int remaining) {
    if (slot == 2 * m - 1) {
      (slot < m ? i : j)[static_cast<std::size_t>(slot % m)] = remaining;
      Integer term = binomial(k, i[0]) * multichoose(i[0], j[0]);
      int used = i[0] + j[0];
      for (int s = 1; s < m && sgn(term) != 0; ++s) {
        const int is = i[static_cast<std::size_t>(s)];
        const int js = j[static_cast<std::size_t>(s)];
        Integer inner(0);
        for (int r = 0; r <= std::min(is, js); ++r) {
          inner += binomial(k, r) * multichoose(r, js - r) * binomial(k - r - used, is - r);
        }
        term *= inner;
        used += is + js;
      }
      if (sgn(term) == 0) return;
      Exponents e{};
      for (int s = 0; s < m; ++s) {
        e[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(i[static_cast<std::size_t>(s)]);
        e[static_cast<std::size_t>(m + s)] = static_cast<std::uint8_t>(j[static_cast<std::size_t>(s)]);
      }
      total += RatPoly::monomial(nvars, e, make_rational(term, Integer(k)));
      return;
    }
    for (int value = 0; value <= remaining; ++value) {
      (slot < m ? i : j)[static_cast<std::size_t>(slot % m)] = value;
      visit(slot + 1, remaining - value);
    }
  };
  visit(0, k + 1);
  return total;
}

}  // namespace rectchar
