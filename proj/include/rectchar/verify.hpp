#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rectchar/multivar_poly.hpp"

namespace rectchar {

/// Names for the four variables of the m = 2 data: a = p_1, p = p_2, b = q_1, q = q_2.
const std::vector<std::string>& two_rectangle_names();

/// The published (-1)^k F_k(a, p; -b, -q) for k = 1..4, as text.
const std::string& golden_flipped_text(int k);

/// golden_flipped_text(k) parsed in the variable order (a, p, b, q).
IntPoly golden_flipped(int k);

struct CheckResult {
  int id = 0;
  std::string name;
  std::string parameters;
  bool passed = false;
  double elapsed_seconds = 0;
  double budget_seconds = 0;
  std::string detail;
  std::string counterexample;  // parameters that reproduce the first failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

enum class VerifyLevel { kQuick, kFull };

/// What a criterion body reports; timing and budget are added by run_criterion.
struct CheckOutcome {
  bool passed = false;
  std::string detail;
  std::string counterexample;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::string parameters;
  double budget_seconds = 0;
  std::function<CheckOutcome()> run;
};

/// The twelve acceptance criteria. kQuick uses the acceptance grid and kFull
/// extends each grid one notch.
std::vector<Criterion> acceptance_criteria(VerifyLevel level);

/// Times `criterion`; an exception or a blown budget counts as failure.
CheckResult run_criterion(const Criterion& criterion);

/// Runs every criterion in order, or only those whose id is in `only`.
VerifyReport run_verify(VerifyLevel level, const std::vector<int>& only = {},
                        const std::function<void(const CheckResult&)>& on_result = {});

/// One line per check: "PASS [3] name (params) 0.12s" plus the detail.
std::string format_result(const CheckResult& result);

}  // namespace rectchar
