#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "rectchar/character.hpp"
#include "rectchar/rect_theorem.hpp"

using namespace rectchar;

namespace {

const std::vector<std::string> kPQ{"p", "q"};

Integer at(const IntPoly& poly, int p, int q) { return poly.evaluate<Integer>(std::vector<Integer>{Integer(p), Integer(q)}); }

}  // namespace

TEST(FactorizationPoly, SmallCases) {
  EXPECT_EQ(to_string(factorization_poly(Partition({1})), kPQ), "p*q");
  EXPECT_EQ(to_string(factorization_poly(Partition({2})), kPQ), "-p^2*q + p*q^2");
  // vanishes on squares
  const IntPoly f2 = factorization_poly(Partition({2}));
  for (int p = 1; p <= 5; ++p) EXPECT_EQ(at(f2, p, p), 0);
  // (pq)_2 for two fixed points
  EXPECT_EQ(at(factorization_poly(Partition({1, 1})), 3, 4), 12 * 11);
}

TEST(FactorizationPoly, TableMatchesPairwiseCheck) {
  for (int k = 1; k <= 5; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      const Permutation w = canonical_permutation(mu);
      const auto counts = factorization_counts(w);
      const auto expected = oracle::factorization_table(w);
      for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= k; ++b) {
          EXPECT_EQ(Integer(static_cast<unsigned long>(counts.count(a, b))),
                    expected[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
      }
    }
  }
}

TEST(FactorizationPoly, RepresentativeIndependence) {
  std::mt19937_64 rng(3);
  for (int k = 1; k <= 7; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      std::vector<int> g(static_cast<std::size_t>(k));
      std::iota(g.begin(), g.end(), 1);
      std::shuffle(g.begin(), g.end(), rng);
      const Permutation conj = Permutation(g);
      const Permutation w = conj * canonical_permutation(mu) * inverse(conj);
      EXPECT_EQ(factorization_poly(w), factorization_poly(mu)) << mu.to_string();
    }
  }
}

TEST(FactorizationPoly, DegreeAndExtremeCoefficients) {
  for (int k = 1; k <= 7; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      const IntPoly f = factorization_poly(mu);
      EXPECT_EQ(f.total_degree(), k + mu.length());
      Exponents e{};
      e[0] = static_cast<std::uint8_t>(k);
      e[1] = static_cast<std::uint8_t>(mu.length());
      EXPECT_EQ(abs(f.coefficient(e)), 1) << mu.to_string();
      std::swap(e[0], e[1]);
      EXPECT_EQ(abs(f.coefficient(e)), 1) << mu.to_string();
    }
  }
}

TEST(FactorizationPoly, ThreadCountDoesNotChangeTheResult) {
  const Partition mu{4, 2, 1};
  ::setenv("RECTCHAR_THREADS", "1", 1);
  const auto serial = factorization_counts(canonical_permutation(mu));
  ::setenv("RECTCHAR_THREADS", "4", 1);
  const auto parallel = factorization_counts(canonical_permutation(mu));
  ::unsetenv("RECTCHAR_THREADS");
  EXPECT_EQ(serial.table, parallel.table);
}

TEST(FactorizationPoly, CapIsEnforced) {
  EXPECT_THROW(factorization_poly(Partition({11})), std::out_of_range);
  EXPECT_THROW(factorization_poly(Partition({4}), 3), std::out_of_range);
}

TEST(Theorem1, SmallCases) {
  EXPECT_TRUE(theorem1_check(1, 1, Partition({1})));
  EXPECT_TRUE(theorem1_check(2, 3, Partition({2})));
  EXPECT_EQ(normalized_character(Partition::rectangle(2, 3), Partition({2})), 6);
  EXPECT_THROW(theorem1_check(1, 2, Partition({3})), std::invalid_argument);
}

TEST(Theorem1, AgreesWithTheCharacterOracle) {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const Partition rect = Partition::rectangle(p, q);
      for (int k = 1; k <= std::min(6, p * q); ++k) {
        for (const Partition& mu : partitions_of(k)) {
          EXPECT_EQ(Rational(at(factorization_poly(mu), p, q)), oracle::normalized_character(rect, mu))
              << p << "x" << q << " " << mu.to_string();
        }
      }
    }
  }
}

TEST(Theorem1, Grid) {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      for (int k = 1; k <= std::min(7, p * q); ++k) {
        for (const Partition& mu : partitions_of(k)) EXPECT_TRUE(theorem1_check(p, q, mu));
      }
    }
  }
}

TEST(SchurSide, MatchesFactorizationSum) {
  EXPECT_EQ(schur_side(3, 5, Partition({1})), 15);
  EXPECT_TRUE(sss_identity_check(2, 3, Partition({2})));
  for (int k = 1; k <= 6; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      for (int p = 1; p <= 4; ++p) {
        for (int q = 1; q <= 4; ++q) EXPECT_TRUE(sss_identity_check(p, q, mu)) << mu.to_string();
      }
    }
  }
}

TEST(CatalanPairs, CountsAndRefinement) {
  const auto catalan = oracle::catalan(8);
  EXPECT_EQ(catalan_pair_count(1), 1);
  EXPECT_EQ(catalan_pair_count(3), 5);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(catalan_pair_count(k), catalan[static_cast<std::size_t>(k)]);

  const auto two = narayana_refinement(2);
  EXPECT_EQ(two.at(1), 1);
  EXPECT_EQ(two.at(2), 1);
  const auto three = narayana_refinement(3);
  EXPECT_EQ(three.at(1), 1);
  EXPECT_EQ(three.at(2), 3);
  EXPECT_EQ(three.at(3), 1);
  for (int k = 1; k <= 7; ++k) {
    Integer total(0);
    for (const auto& [i, c] : narayana_refinement(k)) {
      EXPECT_EQ(c, binomial(k, i) * binomial(k, i - 1) / k);
      total += c;
    }
    EXPECT_EQ(total, catalan[static_cast<std::size_t>(k)]);
  }
}
