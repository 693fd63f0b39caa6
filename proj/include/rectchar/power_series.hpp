#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rectchar/numeric.hpp"

namespace rectchar {

/// a_0 + a_1 x + ... + a_T x^T + O(x^{T+1}).
template <class R>
class PowerSeries {
 public:
  /// Pads with zeros or truncates `coefficients` to order T.
  PowerSeries(std::vector<R> coefficients, int order, const R& zero) : zero_(zero), coeffs_(std::move(coefficients)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order + 1), zero_);
  }

  static PowerSeries constant(const R& value, int order) {
    return PowerSeries(std::vector<R>{value}, order, zero_like(value));
  }

  static PowerSeries x(int order, const R& proto) {
    return PowerSeries(std::vector<R>{zero_like(proto), one_like(proto)}, order, zero_like(proto));
  }

  /// 1 / (1 - ratio x).
  static PowerSeries geometric(const R& ratio, int order) {
    std::vector<R> coeffs;
    R power = one_like(ratio);
    for (int n = 0; n <= order; ++n) {
      coeffs.push_back(power);
      power = power * ratio;
    }
    return PowerSeries(std::move(coeffs), order, zero_like(ratio));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& coefficient(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond the truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  PowerSeries truncated(int order) const {
    return PowerSeries(coeffs_, std::min(order, this->order()), zero_);
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<R> out;
    for (int n = 0; n <= order; ++n) out.push_back(a.coeffs_[static_cast<std::size_t>(n)] + b.coeffs_[static_cast<std::size_t>(n)]);
    return PowerSeries(std::move(out), order, a.zero_);
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<R> out;
    for (int n = 0; n <= order; ++n) out.push_back(a.coeffs_[static_cast<std::size_t>(n)] - b.coeffs_[static_cast<std::size_t>(n)]);
    return PowerSeries(std::move(out), order, a.zero_);
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<std::size_t>(order + 1), a.zero_);
    for (int i = 0; i <= order; ++i) {
      if (is_zero(a.coeffs_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; i + j <= order; ++j) {
        out[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return PowerSeries(std::move(out), order, a.zero_);
  }

  /// 1/f; a_0 must be a unit of the coefficient ring.
  PowerSeries reciprocal() const {
    const R inv0 = unit_inverse(coeffs_.front());
    std::vector<R> out{inv0};
    for (int n = 1; n <= order(); ++n) {
      R acc = zero_;
      for (int j = 1; j <= n; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
      out.push_back(-(inv0 * acc));
    }
    return PowerSeries(std::move(out), order(), zero_);
  }

  PowerSeries pow(unsigned exponent) const {
    PowerSeries result = constant(one_like(zero_), order());
    PowerSeries base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  /// f(g(x)); g must have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const {
    if (!is_zero(inner.coeffs_.front())) throw std::domain_error("composition needs an inner series without constant term");
    const int order = std::min(this->order(), inner.order());
    PowerSeries result = constant(coeffs_[static_cast<std::size_t>(order)], order);
    for (int n = order - 1; n >= 0; --n) {
      result = result * inner + constant(coeffs_[static_cast<std::size_t>(n)], order);
    }
    return result;
  }

  /// g with f(g(x)) = x + O(x^{T+1}), via Lagrange inversion
  /// [x^n] g = (1/n) [x^{n-1}] (x / f(x))^n. Needs a_0 = 0 and a_1 a unit,
  /// and coefficients that admit division by integers.
  PowerSeries compositional_inverse() const {
    if (order() < 1) throw std::domain_error("compositional inverse needs order >= 1");
    if (!is_zero(coeffs_[0])) throw std::domain_error("compositional inverse needs a_0 = 0");
    // x / f(x) = 1 / (a_1 + a_2 x + ...), known to order T - 1.
    PowerSeries quotient(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()), order() - 1, zero_);
    const PowerSeries h = quotient.reciprocal();
    std::vector<R> out{zero_};
    PowerSeries power = h;
    for (int n = 1; n <= order(); ++n) {
      out.push_back(divide_by(power.coefficient(n - 1), n));
      if (n < order()) power = power * h;
    }
    return PowerSeries(std::move(out), order(), zero_);
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  R zero_;
  std::vector<R> coeffs_;
};

}  // namespace rectchar
