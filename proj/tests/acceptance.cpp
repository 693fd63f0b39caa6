// The twelve acceptance criteria, one test each. Every test prints a single
// PASS/FAIL line with its parameters and timing.

#include <gtest/gtest.h>

#include <iostream>

#include "rectchar/verify.hpp"

namespace {

class Acceptance : public ::testing::TestWithParam<int> {};

TEST_P(Acceptance, Criterion) {
  const auto criteria = rectchar::acceptance_criteria(rectchar::VerifyLevel::kQuick);
  const auto& criterion = criteria.at(static_cast<std::size_t>(GetParam() - 1));
  ASSERT_EQ(criterion.id, GetParam());
  const rectchar::CheckResult result = rectchar::run_criterion(criterion);
  std::cout << rectchar::format_result(result) << std::endl;
  EXPECT_TRUE(result.passed) << result.detail << " | " << result.counterexample;
}

std::string criterion_name(const ::testing::TestParamInfo<int>& info) {
  const auto criteria = rectchar::acceptance_criteria(rectchar::VerifyLevel::kQuick);
  return "c" + std::to_string(info.param) + "_" + criteria.at(static_cast<std::size_t>(info.param - 1)).name;
}

INSTANTIATE_TEST_SUITE_P(All, Acceptance, ::testing::Range(1, 13), criterion_name);

}  // namespace
