#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rectchar/numeric.hpp"

namespace rectchar {

inline constexpr int kMaxVariables = 16;

/// Exponent vector; entries past the polynomial's variable count stay zero.
using Exponents = std::array<std::uint8_t, kMaxVariables>;

inline int exponent_sum(const Exponents& e) {
  int total = 0;
  for (auto v : e) total += v;
  return total;
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int i = 0; i < kMaxVariables; ++i) {
    const int v = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    if (v > 255) throw std::overflow_error("monomial exponent exceeds 255");
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return out;
}

/// Graded lexicographic, highest first: larger total degree first, then
/// larger exponent of the earlier variable first.
inline bool canonical_before(const Exponents& a, const Exponents& b) {
  const int da = exponent_sum(a);
  const int db = exponent_sum(b);
  if (da != db) return da > db;
  return b < a;
}

/// Sparse polynomial with exact coefficients in variables x_0..x_{n-1}.
/// Terms are kept sorted by exponent vector with no zero coefficients, so
/// structural equality is polynomial equality.
template <class Scalar>
class MultivarPoly {
 public:
  using scalar_type = Scalar;

  struct Term {
    Exponents exponents{};
    Scalar coefficient;

    bool operator==(const Term& other) const {
      return exponents == other.exponents && coefficient == other.coefficient;
    }
  };

  MultivarPoly() = default;

  explicit MultivarPoly(int variables) : nvars_(checked_variables(variables)) {}

  MultivarPoly(int variables, const Scalar& constant) : nvars_(checked_variables(variables)) {
    if (!rectchar::is_zero(constant)) terms_.push_back({Exponents{}, constant});
  }

  static MultivarPoly variable(int variables, int index) {
    if (index < 0 || index >= variables) throw std::out_of_range("variable index out of range");
    Exponents e{};
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(variables, e, Scalar(1));
  }

  static MultivarPoly monomial(int variables, const Exponents& exponents, const Scalar& coefficient) {
    MultivarPoly out(variables);
    for (int i = variables; i < kMaxVariables; ++i) {
      if (exponents[static_cast<std::size_t>(i)] != 0) throw std::out_of_range("exponent on a missing variable");
    }
    if (!rectchar::is_zero(coefficient)) out.terms_.push_back({exponents, coefficient});
    return out;
  }

  /// Sums repeated exponents and drops zero coefficients.
  static MultivarPoly from_terms(int variables, std::vector<Term> terms) {
    MultivarPoly out(variables);
    out.terms_ = normalize(std::move(terms));
    return out;
  }

  int variables() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.front().exponents) == 0);
  }

  Scalar constant_term() const { return coefficient(Exponents{}); }

  Scalar coefficient(const Exponents& exponents) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                               [](const Term& t, const Exponents& e) { return t.exponents < e; });
    if (it != terms_.end() && it->exponents == exponents) return it->coefficient;
    return Scalar(0);
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int degree = -1;
    for (const Term& t : terms_) degree = std::max(degree, exponent_sum(t.exponents));
    return degree;
  }

  MultivarPoly homogeneous_part(int degree) const {
    MultivarPoly out(nvars_);
    for (const Term& t : terms_) {
      if (exponent_sum(t.exponents) == degree) out.terms_.push_back(t);
    }
    return out;
  }

  Scalar coefficient_sum() const {
    Scalar total(0);
    for (const Term& t : terms_) total += t.coefficient;
    return total;
  }

  template <class T>
  T evaluate(std::span<const T> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
    T total(0);
    for (const Term& t : terms_) {
      T value(t.coefficient);
      for (int i = 0; i < nvars_; ++i) {
        for (int e = 0; e < t.exponents[static_cast<std::size_t>(i)]; ++e) value *= point[static_cast<std::size_t>(i)];
      }
      total += value;
    }
    return total;
  }

  /// Substitutes x_i -> -x_i for each listed index.
  MultivarPoly negate_variables(std::span<const int> indices) const {
    MultivarPoly out = *this;
    for (Term& t : out.terms_) {
      int parity = 0;
      for (int i : indices) parity += t.exponents[static_cast<std::size_t>(i)];
      if (parity % 2 != 0) t.coefficient = -t.coefficient;
    }
    return out;
  }

  MultivarPoly pow(unsigned exponent) const {
    MultivarPoly result(nvars_, Scalar(1));
    MultivarPoly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  MultivarPoly operator-() const {
    MultivarPoly out = *this;
    for (Term& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }

  MultivarPoly& operator+=(const MultivarPoly& other) {
    check_compatible(other);
    terms_ = merge(terms_, other.terms_, false);
    return *this;
  }

  MultivarPoly& operator-=(const MultivarPoly& other) {
    check_compatible(other);
    terms_ = merge(terms_, other.terms_, true);
    return *this;
  }

  MultivarPoly& operator*=(const Scalar& factor) {
    if (rectchar::is_zero(factor)) {
      terms_.clear();
    } else {
      for (Term& t : terms_) t.coefficient *= factor;
    }
    return *this;
  }

  MultivarPoly& operator*=(const MultivarPoly& other) {
    *this = multiply(*this, other);
    return *this;
  }

  friend MultivarPoly operator+(MultivarPoly a, const MultivarPoly& b) { return a += b; }
  friend MultivarPoly operator-(MultivarPoly a, const MultivarPoly& b) { return a -= b; }
  friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) { return multiply(a, b); }
  friend MultivarPoly operator*(MultivarPoly a, const Scalar& s) { return a *= s; }
  friend MultivarPoly operator*(const Scalar& s, MultivarPoly a) { return a *= s; }

  friend bool operator==(const MultivarPoly& a, const MultivarPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;

  static int checked_variables(int variables) {
    if (variables < 0 || variables > kMaxVariables) {
      throw std::out_of_range("polynomials support at most " + std::to_string(kMaxVariables) + " variables");
    }
    return variables;
  }

  void check_compatible(const MultivarPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials over different variable sets");
  }

  static std::vector<Term> normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
      if (!out.empty() && out.back().exponents == t.exponents) {
        out.back().coefficient += t.coefficient;
      } else {
        if (!out.empty() && rectchar::is_zero(out.back().coefficient)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && rectchar::is_zero(out.back().coefficient)) out.pop_back();
    return out;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->exponents < ib->exponents)) {
        out.push_back(*ia++);
      } else if (ia == a.end() || ib->exponents < ia->exponents) {
        out.push_back(subtract ? Term{ib->exponents, -ib->coefficient} : *ib);
        ++ib;
      } else {
        Scalar sum = subtract ? Scalar(ia->coefficient - ib->coefficient) : Scalar(ia->coefficient + ib->coefficient);
        if (!rectchar::is_zero(sum)) out.push_back({ia->exponents, std::move(sum)});
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  static MultivarPoly multiply(const MultivarPoly& a, const MultivarPoly& b) {
    a.check_compatible(b);
    MultivarPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    const MultivarPoly& small = a.size() <= b.size() ? a : b;
    const MultivarPoly& large = a.size() <= b.size() ? b : a;
    if (small.size() <= 8) {
      // A shift by a fixed exponent vector preserves lexicographic order.
      for (const Term& s : small.terms_) {
        std::vector<Term> shifted;
        shifted.reserve(large.size());
        for (const Term& t : large.terms_) {
          shifted.push_back({add_exponents(s.exponents, t.exponents), Scalar(s.coefficient * t.coefficient)});
        }
        out.terms_ = merge(out.terms_, shifted, false);
      }
      return out;
    }
    std::vector<Term> products;
    products.reserve(a.size() * b.size());
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        products.push_back({add_exponents(s.exponents, t.exponents), Scalar(s.coefficient * t.coefficient)});
      }
    }
    out.terms_ = normalize(std::move(products));
    return out;
  }
};

using IntPoly = MultivarPoly<Integer>;
using RatPoly = MultivarPoly<Rational>;

// Ring helpers for the series templates.
template <class S>
MultivarPoly<S> zero_like(const MultivarPoly<S>& proto) {
  return MultivarPoly<S>(proto.variables());
}
template <class S>
MultivarPoly<S> one_like(const MultivarPoly<S>& proto) {
  return MultivarPoly<S>(proto.variables(), S(1));
}
template <class S>
bool is_zero(const MultivarPoly<S>& value) {
  return value.is_zero();
}
template <class S>
MultivarPoly<S> unit_inverse(const MultivarPoly<S>& value) {
  if (!value.is_constant()) throw std::domain_error("non-constant polynomial is not a unit");
  return MultivarPoly<S>(value.variables(), unit_inverse(value.constant_term()));
}
inline RatPoly divide_by(const RatPoly& value, long divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  return value * Rational(1, divisor);
}

template <class To, class From>
MultivarPoly<To> convert_coefficients(const MultivarPoly<From>& poly) {
  std::vector<typename MultivarPoly<To>::Term> terms;
  terms.reserve(poly.size());
  for (const auto& t : poly.terms()) terms.push_back({t.exponents, To(t.coefficient)});
  return MultivarPoly<To>::from_terms(poly.variables(), std::move(terms));
}

/// The integer polynomial when every coefficient is integral.
inline std::optional<IntPoly> to_integer_poly(const RatPoly& poly) {
  std::vector<IntPoly::Term> terms;
  for (const auto& t : poly.terms()) {
    if (!is_integral(t.coefficient)) return std::nullopt;
    terms.push_back({t.exponents, t.coefficient.get_num()});
  }
  return IntPoly::from_terms(poly.variables(), std::move(terms));
}

inline bool all_coefficients_divisible(const IntPoly& poly, const Integer& divisor) {
  return std::all_of(poly.terms().begin(), poly.terms().end(),
                     [&](const IntPoly::Term& t) { return mpz_divisible_p(t.coefficient.get_mpz_t(), divisor.get_mpz_t()) != 0; });
}

/// Coefficient-wise exact division; throws std::domain_error otherwise.
inline IntPoly divide_exact(const IntPoly& poly, const Integer& divisor) {
  if (!all_coefficients_divisible(poly, divisor)) throw std::domain_error("polynomial is not divisible");
  std::vector<IntPoly::Term> terms;
  for (const auto& t : poly.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.coefficient.get_mpz_t(), divisor.get_mpz_t());
    terms.push_back({t.exponents, q});
  }
  return IntPoly::from_terms(poly.variables(), std::move(terms));
}

template <class S>
bool has_nonnegative_coefficients(const MultivarPoly<S>& poly) {
  return std::all_of(poly.terms().begin(), poly.terms().end(), [](const auto& t) { return sgn(t.coefficient) >= 0; });
}

/// Terms in canonical (graded lexicographic, highest first) order.
template <class S>
std::vector<typename MultivarPoly<S>::Term> canonical_terms(const MultivarPoly<S>& poly) {
  auto terms = poly.terms();
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return canonical_before(a.exponents, b.exponents); });
  return terms;
}

/// "p", "q" for a single rectangle; p1..pm, q1..qm otherwise.
std::vector<std::string> rect_variable_names(int m);

/// Human-readable form, e.g. "-p^2*q + p*q^2"; "0" for the zero polynomial.
template <class S>
std::string to_string(const MultivarPoly<S>& poly, std::span<const std::string> names) {
  if (static_cast<int>(names.size()) < poly.variables()) throw std::invalid_argument("too few variable names");
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : canonical_terms(poly)) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    S magnitude = t.coefficient;
    if (negative) magnitude = -magnitude;
    std::string monomial;
    for (int i = 0; i < poly.variables(); ++i) {
      const int e = t.exponents[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[static_cast<std::size_t>(i)];
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      out += rectchar::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += rectchar::to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

/// Streams with placeholder names x1, x2, ...
template <class S>
std::ostream& operator<<(std::ostream& os, const MultivarPoly<S>& poly) {
  std::vector<std::string> names;
  for (int i = 1; i <= poly.variables(); ++i) names.push_back("x" + std::to_string(i));
  return os << to_string(poly, names);
}

/// Array of {"exp": [...], "coef": "<decimal>"} in canonical order.
template <class S>
nlohmann::json to_json(const MultivarPoly<S>& poly) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : canonical_terms(poly)) {
    std::vector<int> exps(t.exponents.begin(), t.exponents.begin() + poly.variables());
    out.push_back({{"exp", exps}, {"coef", rectchar::to_string(t.coefficient)}});
  }
  return out;
}

template <class S>
MultivarPoly<S> poly_from_json(const nlohmann::json& doc, int variables) {
  std::vector<typename MultivarPoly<S>::Term> terms;
  for (const auto& entry : doc) {
    const auto exps = entry.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != variables) throw std::invalid_argument("exponent vector has wrong arity");
    Exponents e{};
    for (int i = 0; i < variables; ++i) {
      if (exps[static_cast<std::size_t>(i)] < 0 || exps[static_cast<std::size_t>(i)] > 255) {
        throw std::invalid_argument("exponent out of range");
      }
      e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exps[static_cast<std::size_t>(i)]);
    }
    S c(entry.at("coef").get<std::string>());
    if constexpr (std::is_same_v<S, Rational>) c.canonicalize();
    terms.push_back({e, c});
  }
  return MultivarPoly<S>::from_terms(variables, std::move(terms));
}

/// Parses sums of monomials such as "a^2b + 2*a*p*q - p^2*q". Variables may be
/// juxtaposed or joined with '*'; the longest matching name wins.
template <class S>
MultivarPoly<S> parse_polynomial(std::string_view text, std::span<const std::string> names) {
  const int nvars = static_cast<int>(names.size());
  std::vector<typename MultivarPoly<S>::Term> terms;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };

  skip_spaces();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_spaces();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_spaces();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    S coefficient(1);
    bool saw_factor = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string number = read_digits();
      if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den = read_digits();
        if (den.empty()) fail("missing denominator");
        number += "/" + den;
      }
      coefficient = S(number);
      if constexpr (std::is_same_v<S, Rational>) coefficient.canonicalize();
      saw_factor = true;
    }
    Exponents e{};
    while (true) {
      skip_spaces();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_spaces();
      }
      int match = -1;
      std::size_t match_length = 0;
      for (int v = 0; v < nvars; ++v) {
        const std::string& name = names[static_cast<std::size_t>(v)];
        if (name.size() > match_length && text.substr(i, name.size()) == name) {
          match = v;
          match_length = name.size();
        }
      }
      if (match < 0) break;
      i += match_length;
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string digits = read_digits();
        if (digits.empty()) fail("missing exponent");
        power = std::stoi(digits);
      }
      const int total = e[static_cast<std::size_t>(match)] + power;
      if (total > 255) fail("exponent too large");
      e[static_cast<std::size_t>(match)] = static_cast<std::uint8_t>(total);
      saw_factor = true;
    }
    if (!saw_factor) fail("empty term");
    if (sign < 0) coefficient = -coefficient;
    terms.push_back({e, coefficient});
  }
  return MultivarPoly<S>::from_terms(nvars, std::move(terms));
}

}  // namespace rectchar
