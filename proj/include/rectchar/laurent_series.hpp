#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectchar/numeric.hpp"

namespace rectchar {

/// Raised when a coefficient below the computed depth is requested. The
/// caller should expand again with more terms.
class InsufficientDepth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated expansion in descending powers of x,
///   c_top x^top + c_{top-1} x^{top-1} + ... + c_floor x^floor.
/// An exact series is a finite sum (everything below floor is zero); otherwise
/// coefficients below floor are unknown and reading them is an error.
template <class R>
class LaurentSeries {
 public:
  /// sum_i ascending[i] x^i, exact.
  static LaurentSeries polynomial(std::vector<R> ascending, const R& zero) {
    while (ascending.size() > 1 && is_zero(ascending.back())) ascending.pop_back();
    if (ascending.empty()) ascending.push_back(zero);
    LaurentSeries out(zero);
    out.top_ = static_cast<int>(ascending.size()) - 1;
    out.floor_ = 0;
    out.exact_ = true;
    out.coeffs_.assign(ascending.rbegin(), ascending.rend());
    return out;
  }

  /// 1/(x - a) = x^{-1} + a x^{-2} + a^2 x^{-3} + ..., first `depth` terms.
  static LaurentSeries reciprocal_linear(const R& a, int depth) {
    if (depth < 1) throw std::invalid_argument("expansion depth must be at least 1");
    LaurentSeries out(zero_like(a));
    out.top_ = -1;
    out.floor_ = -depth;
    out.exact_ = is_zero(a);
    if (out.exact_) {
      out.floor_ = -1;
      out.coeffs_.push_back(one_like(a));
      return out;
    }
    R power = one_like(a);
    for (int d = 0; d < depth; ++d) {
      out.coeffs_.push_back(power);
      power = power * a;
    }
    return out;
  }

  int top_degree() const { return top_; }
  int valid_floor() const { return floor_; }
  bool is_exact() const { return exact_; }

  R coefficient(int degree) const {
    if (degree > top_) return zero_;
    if (degree >= floor_) return coeffs_[static_cast<std::size_t>(top_ - degree)];
    if (exact_) return zero_;
    throw InsufficientDepth("coefficient of x^" + std::to_string(degree) + " lies below the expansion depth x^" +
                            std::to_string(floor_));
  }

  /// (x - a) * this.
  LaurentSeries multiply_linear(const R& a) const {
    LaurentSeries out(zero_);
    out.top_ = top_ + 1;
    out.exact_ = exact_;
    out.floor_ = exact_ ? floor_ : floor_ + 1;
    out.coeffs_.reserve(static_cast<std::size_t>(std::max(0, out.top_ - out.floor_ + 1)));
    for (int d = out.top_; d >= out.floor_; --d) {
      R c = coefficient(d - 1);
      if (d <= top_ && d >= floor_) c -= a * coeffs_[static_cast<std::size_t>(top_ - d)];
      out.coeffs_.push_back(std::move(c));
    }
    return out;
  }

  /// this / (x - b), computed down to x^min_degree (or as deep as the
  /// known coefficients allow, whichever is shallower).
  LaurentSeries divide_linear(const R& b, int min_degree) const {
    LaurentSeries out(zero_);
    out.top_ = top_ - 1;
    out.exact_ = false;
    out.floor_ = exact_ ? min_degree : std::max(min_degree, floor_ - 1);
    out.floor_ = std::min(out.floor_, out.top_ + 1);
    out.coeffs_.reserve(static_cast<std::size_t>(out.top_ - out.floor_ + 1));
    // t_d = s_{d+1} + b t_{d+1}, starting from t_top = s_{top+1} = 0.
    for (int d = out.top_; d >= out.floor_; --d) {
      R t = coefficient(d + 1);
      if (d < out.top_) t += b * out.coeffs_.back();
      out.coeffs_.push_back(std::move(t));
    }
    return out;
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out(a.zero_);
    out.top_ = a.top_ + b.top_;
    out.exact_ = a.exact_ && b.exact_;
    int floor = a.floor_ + b.floor_;
    if (!a.exact_) floor = std::max(floor, a.floor_ + b.top_);
    if (!b.exact_) floor = std::max(floor, b.floor_ + a.top_);
    out.floor_ = std::min(floor, out.top_ + 1);
    for (int d = out.top_; d >= out.floor_; --d) {
      R c = a.zero_;
      const int lo = std::max(a.floor_, d - b.top_);
      const int hi = std::min(a.top_, d - b.floor_);
      for (int j = lo; j <= hi; ++j) {
        c += a.coeffs_[static_cast<std::size_t>(a.top_ - j)] * b.coeffs_[static_cast<std::size_t>(b.top_ - (d - j))];
      }
      out.coeffs_.push_back(std::move(c));
    }
    return out;
  }

 private:
  explicit LaurentSeries(const R& zero) : zero_(zero) {}

  int top_ = 0;
  int floor_ = 0;
  bool exact_ = true;
  R zero_;
  std::vector<R> coeffs_;  // coeffs_[t] is the coefficient of x^{top_ - t}
};

/// [x^degree] of P(x) / prod_i (x - roots[i]) with P given by ascending
/// coefficients. Reciprocals are expanded to deg(P) + #roots + 2 terms; if that
/// proves too shallow the depth is doubled and the expansion repeated.
template <class R>
R rational_function_coefficient(const std::vector<R>& numerator, const std::vector<R>& roots, int degree,
                                const R& zero) {
  const int numerator_degree = static_cast<int>(numerator.size()) - 1;
  int depth = std::max(1, numerator_degree + static_cast<int>(roots.size()) + 2);
  for (int attempt = 0; attempt < 16; ++attempt, depth *= 2) {
    auto series = LaurentSeries<R>::polynomial(numerator, zero);
    for (const R& root : roots) series = series * LaurentSeries<R>::reciprocal_linear(root, depth);
    try {
      return series.coefficient(degree);
    } catch (const InsufficientDepth&) {
      continue;
    }
  }
  throw InsufficientDepth("expansion depth did not converge");
}

}  // namespace rectchar
