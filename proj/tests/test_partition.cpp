#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rectchar/numeric.hpp"
#include "rectchar/partition.hpp"

using namespace rectchar;

TEST(Numeric, FallingFactorialAndBinomialConventions) {
  EXPECT_EQ(falling_factorial(Integer(5), 0), 1);
  EXPECT_EQ(falling_factorial(Integer(5), 3), 60);
  EXPECT_EQ(falling_factorial(Integer(2), 3), 0);
  EXPECT_EQ(falling_factorial(Integer(-1), 2), 2);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-3, 0), 1);
  EXPECT_EQ(binomial(-3, 2), 0);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(multichoose(3, 0), 1);
  EXPECT_EQ(multichoose(3, 2), 6);
  EXPECT_EQ(multichoose(0, 0), 1);
}

TEST(Numeric, CatalanMatchesRecurrence) {
  const auto expected = oracle::catalan(15);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(catalan_number(n), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Numeric, RationalPrinting) {
  EXPECT_EQ(to_string(make_rational(Integer(6), Integer(3))), "2");
  EXPECT_EQ(to_string(make_rational(Integer(-2), Integer(4))), "-1/2");
}

TEST(Partition, ConstructionAndParsing) {
  const Partition lambda = Partition::parse("4,3,1");
  EXPECT_EQ(lambda.size(), 8);
  EXPECT_EQ(lambda.length(), 3);
  EXPECT_EQ(lambda.row(2), 3);
  EXPECT_EQ(lambda.row(7), 0);
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_TRUE(Partition::parse("-").empty());
  EXPECT_EQ(Partition().to_string(), "-");
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,x"), std::invalid_argument);
  EXPECT_EQ(Partition::rectangle(2, 3), Partition({3, 3}));
}

TEST(Partition, ConjugateAndHooks) {
  EXPECT_EQ(conjugate(Partition({4, 3, 1})), Partition({3, 2, 2, 1}));
  const Partition lambda{3, 2};
  EXPECT_EQ(hook_length(lambda, {1, 1}), 4);
  EXPECT_EQ(hook_length(lambda, {1, 3}), 1);
  EXPECT_THROW(hook_length(lambda, {2, 3}), std::invalid_argument);
  EXPECT_EQ(content({2, 1}), -1);
  EXPECT_EQ(hook_product(lambda), 24);
  EXPECT_EQ(syt_count(lambda), 5);
  EXPECT_EQ(syt_count(Partition::rectangle(3, 3)), 42);
}

TEST(Partition, HookFormulaMatchesCornerRecursion) {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      EXPECT_EQ(syt_count(lambda), oracle::syt_count(lambda)) << lambda.to_string();
    }
  }
}

TEST(Partition, ConjugationIsAnInvolutionPreservingSize) {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const Partition c = conjugate(lambda);
      EXPECT_EQ(c.size(), n);
      EXPECT_EQ(conjugate(c), lambda);
      EXPECT_EQ(hook_product(c), hook_product(lambda));
    }
  }
}

TEST(Partition, EnumerationCounts) {
  const std::vector<std::size_t> p_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p_n[static_cast<std::size_t>(n)]);
  // C(p+q, p) shapes fit in a p x q box.
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(partitions_in_box(p, q).size())), binomial(p + q, p));
    }
  }
  EXPECT_EQ(partitions_in_box(5, 5).size(), 252U);
  for (const Partition& lambda : partitions_in_box(3, 4, 5)) {
    EXPECT_EQ(lambda.size(), 5);
    EXPECT_TRUE(lambda.fits_in_box(3, 4));
  }
}

TEST(Partition, ComplementInBox) {
  EXPECT_EQ(complement(Partition({2, 1}), 2, 3), Partition({2, 1}));
  EXPECT_EQ(complement(Partition(), 2, 3), Partition({3, 3}));
  EXPECT_EQ(complement(Partition({3, 3}), 2, 3), Partition());
  EXPECT_THROW(complement(Partition({4}), 2, 3), std::invalid_argument);
  for (const Partition& lambda : partitions_in_box(4, 5)) {
    const Partition c = complement(lambda, 4, 5);
    EXPECT_EQ(c.size() + lambda.size(), 20);
    EXPECT_EQ(complement(c, 4, 5), lambda);
  }
}

TEST(Partition, WithOnes) {
  EXPECT_EQ(with_ones(Partition({3}), 2), Partition({3, 1, 1}));
  EXPECT_EQ(with_ones(Partition(), 0), Partition());
}

TEST(Partition, SkewDiagrams) {
  EXPECT_TRUE(is_skew_diagram(diagram(Partition({3, 2}))));
  // A 2x2 block with the top-left removed is skew.
  EXPECT_TRUE(is_skew_diagram(CellSet{{1, 2}, {2, 1}, {2, 2}}));
  // Rows drifting right going down are not.
  EXPECT_FALSE(is_skew_diagram(CellSet{{1, 1}, {2, 2}}));
  EXPECT_FALSE(is_skew_diagram(CellSet{{1, 1}, {1, 3}}));
  EXPECT_THROW(cellset_hooks(CellSet{{1, 1}, {1, 3}}), std::invalid_argument);
}

TEST(Partition, StraightShapeHooksAgree) {
  for (const Partition& lambda : partitions_of(7)) {
    std::vector<int> direct;
    for (int i = 1; i <= lambda.length(); ++i) {
      for (int j = 1; j <= lambda.row(i); ++j) direct.push_back(hook_length(lambda, {i, j}));
    }
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(cellset_hooks(diagram(lambda)), direct);
  }
}

TEST(Partition, SqShapeHasTheRightSize) {
  for (const Partition& lambda : partitions_in_box(3, 3)) {
    const CellSet sq = sq_shape(lambda, 3, 3);
    EXPECT_EQ(static_cast<int>(sq.size()), 9 + lambda.size());
    EXPECT_TRUE(is_skew_diagram(sq));
  }
}
