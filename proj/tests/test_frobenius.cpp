#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "rectchar/character.hpp"
#include "rectchar/frobenius.hpp"
#include "rectchar/leading_terms.hpp"
#include "rectchar/rect_theorem.hpp"
#include "rectchar/verify.hpp"

using namespace rectchar;

namespace {

const std::vector<std::string>& apbq() { return two_rectangle_names(); }

IntPoly parse4(std::string_view text) { return parse_polynomial<Integer>(text, apbq()); }

// Every m-rectangle shape with sides at most `side`.
std::vector<MultiRectShape> small_shapes(int m, int side) {
  std::vector<MultiRectShape> out;
  std::vector<int> heights(static_cast<std::size_t>(m), 1);
  std::vector<int> widths(static_cast<std::size_t>(m), 1);
  std::function<void(int)> fill = [&](int i) {
    if (i == m) {
      out.push_back({heights, widths});
      return;
    }
    const int widest = i == 0 ? side : widths[static_cast<std::size_t>(i - 1)] - 1;
    for (int h = 1; h <= side; ++h) {
      for (int w = 1; w <= widest; ++w) {
        heights[static_cast<std::size_t>(i)] = h;
        widths[static_cast<std::size_t>(i)] = w;
        fill(i + 1);
      }
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST(MultiRectShape, ToPartition) {
  EXPECT_EQ(to_partition({{2}, {3}}), Partition({3, 3}));
  EXPECT_EQ(to_partition({{1, 1}, {2, 1}}), Partition({2, 1}));
  EXPECT_EQ(to_partition({{2, 1}, {3, 1}}), Partition({3, 3, 1}));
  EXPECT_THROW(to_partition({{1, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(to_partition({{1, 0}, {3, 2}}), std::invalid_argument);
  EXPECT_THROW(to_partition({{1}, {3, 2}}), std::invalid_argument);
}

TEST(Frobenius, SmallValues) {
  EXPECT_EQ(frobenius_normalized(Partition({6}), 1), 6);
  EXPECT_EQ(frobenius_normalized(Partition({2, 2}), 2), 0);
  EXPECT_EQ(frobenius_normalized(Partition({3, 3}), 3), normalized_character(Partition({3, 3}), Partition({3})));
  EXPECT_THROW(frobenius_normalized(Partition({2}), 3), std::invalid_argument);
}

TEST(Frobenius, MatchesCharacterOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(frobenius_normalized(lambda, k), oracle::normalized_character(lambda, Partition({k})))
            << lambda.to_string() << " k=" << k;
      }
    }
  }
}

TEST(FkPolynomial, PublishedTwoRectangleData) {
  EXPECT_EQ(f_k_polynomial(2, 1), parse4("ab+pq"));
  EXPECT_EQ(flip_signs(f_k_polynomial(2, 2), 2), parse4("a^2b+ab^2+2apq+p^2q+pq^2"));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(flip_signs(f_k_polynomial(2, k), k), golden_flipped(k)) << k;
  Exponents e{};
  e[0] = 1;
  e[1] = 2;
  e[3] = 2;
  EXPECT_EQ(flip_signs(f_k_polynomial(2, 4), 4).coefficient(e), 14);
}

TEST(FkPolynomial, SpecializesToFrobenius) {
  for (int m = 1; m <= 2; ++m) {
    for (int k = 1; k <= 5; ++k) {
      const IntPoly f = f_k_polynomial(m, k);
      for (const MultiRectShape& shape : small_shapes(m, 4)) {
        if (shape.size() < k) continue;
        EXPECT_EQ(Rational(f.evaluate<Integer>(shape.as_point())), frobenius_normalized(to_partition(shape), k));
      }
    }
  }
}

TEST(FkPolynomial, ThreeRectanglesSpecialize) {
  const IntPoly f = f_k_polynomial(3, 3);
  for (const MultiRectShape& shape : {MultiRectShape{{1, 2, 1}, {5, 3, 1}}, MultiRectShape{{2, 1, 3}, {4, 2, 1}}}) {
    EXPECT_EQ(Rational(f.evaluate<Integer>(shape.as_point())), normalized_character(to_partition(shape), Partition({3})));
  }
}

TEST(FkPolynomial, SingleRectangleMeetsFactorizationSum) {
  for (int k = 1; k <= 7; ++k) EXPECT_EQ(f_k_polynomial(1, k), factorization_poly(Partition({k}))) << k;
}

TEST(FkPolynomial, SpecialValueAndIntegrality) {
  EXPECT_EQ(f_k_special_value(1, 1), 1);
  EXPECT_EQ(f_k_special_value(1, 3), 6);
  EXPECT_EQ(f_k_special_value(3, 2), 12);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 6; ++k) {
      EXPECT_TRUE(integrality_witness(m, k));
      EXPECT_EQ(f_k_special_value(m, k), falling_factorial(Integer(k + m - 1), k));
    }
  }
}

TEST(LeadingTerms, Examples) {
  EXPECT_EQ(g_k_leading(2, 1), f_k_polynomial(2, 1));
  EXPECT_EQ(flip_signs(g_k_leading(2, 3), 3), golden_flipped(3) - parse4("ab+pq"));
  EXPECT_EQ(flip_signs(g_k_leading(1, 2), 2), parse_polynomial<Integer>("p^2q+pq^2", std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(g_k_via_lagrange(1, 1), parse_polynomial<Integer>("pq", std::vector<std::string>{"p", "q"}));
}

TEST(LeadingTerms, LagrangeRouteAgrees) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(g_k_leading(m, k), g_k_via_lagrange(m, k)) << m << "," << k;
  }
}

TEST(LeadingTerms, GeneratingFunction) {
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(gk_generating_check(m, 4)) << m;
  // All corners zero: f = x, so every G_k vanishes.
  const std::vector<RatPoly> zeros(2, RatPoly(4));
  const auto series = gk_generating_series(zeros, zeros, 5);
  for (const RatPoly& c : series) EXPECT_TRUE(c.is_zero());
}

TEST(LeadingTerms, CoefficientSums) {
  const auto catalan = oracle::catalan(10);
  const auto s1 = s_k_sequence(1, 10);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(s1[static_cast<std::size_t>(k - 1)], catalan[static_cast<std::size_t>(k)]);

  const auto schroder = oracle::schroder(8);
  const auto s2 = s_k_sequence(2, 8);
  const auto s2_series = s_k_via_inverse(2, 8);
  EXPECT_EQ(s2[0], 2);
  EXPECT_EQ(s2[1], 6);
  EXPECT_EQ(s2[2], 22);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(s2[static_cast<std::size_t>(k - 1)], schroder[static_cast<std::size_t>(k)]);
    EXPECT_EQ(s2_series[static_cast<std::size_t>(k - 1)], schroder[static_cast<std::size_t>(k)]);
  }
  const auto s3 = s_k_sequence(3, 6);
  EXPECT_EQ(s3, s_k_via_inverse(3, 6));
  EXPECT_EQ(s_k_via_inverse(1, 10), s1);
}

TEST(LeadingTerms, Narayana) {
  EXPECT_EQ(narayana_number(3, 2), 3);
  EXPECT_EQ(narayana_number(4, 2), 6);
  EXPECT_TRUE(narayana_check(10));
  // the factorization counts give the same triangle
  for (int k = 1; k <= 8; ++k) {
    const IntPoly g = flip_signs(g_k_leading(1, k), k);
    for (const auto& [i, count] : narayana_refinement(k)) {
      Exponents e{};
      e[0] = static_cast<std::uint8_t>(i);
      e[1] = static_cast<std::uint8_t>(k + 1 - i);
      EXPECT_EQ(g.coefficient(e), count);
    }
  }
}

TEST(Elizalde, MatchesLeadingTerms) {
  EXPECT_EQ(elizalde_formula(1, 2), parse_polynomial<Rational>("p^2q+pq^2", std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(elizalde_formula(2, 2), convert_coefficients<Rational>(parse4("a^2b+ab^2+2apq+p^2q+pq^2")));
  Exponents e{};
  e[0] = 1;
  e[1] = 2;
  e[3] = 2;
  EXPECT_EQ(elizalde_formula(2, 4).coefficient(e), 14);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 5; ++k) {
      EXPECT_EQ(elizalde_formula(m, k), convert_coefficients<Rational>(flip_signs(g_k_leading(m, k), k)))
          << m << "," << k;
    }
  }
}
