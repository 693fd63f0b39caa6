#include "rectchar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rectchar/character.hpp"
#include "rectchar/frobenius.hpp"
#include "rectchar/interpolation.hpp"
#include "rectchar/leading_terms.hpp"
#include "rectchar/partition.hpp"
#include "rectchar/rect_theorem.hpp"
#include "rectchar/schur.hpp"

namespace rectchar {

const std::vector<std::string>& two_rectangle_names() {
  static const std::vector<std::string> names{"a", "p", "b", "q"};
  return names;
}

const std::string& golden_flipped_text(int k) {
  static const std::vector<std::string> data{
      "ab+pq",
      "a^2b+ab^2+2apq+p^2q+pq^2",
      "a^3b+3a^2b^2+3a^2pq+ab^3+3abpq+3ap^2q+3apq^2+p^3q+3p^2q^2+pq^3+ab+pq",
      "a^4b+6a^3b^2+4a^3pq+6a^2b^3+12a^2bpq+6a^2p^2q+6a^2pq^2+ab^4+4ab^2pq+4abp^2q+4abpq^2+4ap^3q"
      "+14ap^2q^2+4apq^3+p^4q+6p^3q^2+6p^2q^3+pq^4+5a^2b+5ab^2+10apq+5p^2q+5pq^2",
  };
  if (k < 1 || k > 4) throw std::out_of_range("published data covers k = 1..4");
  return data[static_cast<std::size_t>(k - 1)];
}

IntPoly golden_flipped(int k) { return parse_polynomial<Integer>(golden_flipped_text(k), two_rectangle_names()); }

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json out;
  out["passed"] = passed();
  out["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json entry{{"id", c.id},
                         {"name", c.name},
                         {"parameters", c.parameters},
                         {"passed", c.passed},
                         {"elapsed_seconds", c.elapsed_seconds},
                         {"budget_seconds", c.budget_seconds},
                         {"detail", c.detail}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    out["checks"].push_back(std::move(entry));
  }
  return out;
}

namespace {

struct Grid {
  int theorem_side;         // p, q <= this
  int theorem_k;            // k <= min(this, pq)
  int box_side;             // lemma and hook checks
  int special_m;
  int special_k;
  int frobenius_n;
  int lagrange_m;
  int lagrange_k;
  int catalan_k;            // S_k and Narayana for m = 1
  int schroder_k;           // S_k routes for m = 2
  int pairs_k;
  int refinement_k;
  int elizalde_m;
  int elizalde_k;
  int conjecture_k;
  int sss_k;
  int sss_side;
};

Grid grid_for(VerifyLevel level) {
  if (level == VerifyLevel::kQuick) return {4, 8, 5, 4, 8, 14, 3, 4, 10, 8, 8, 7, 3, 5, 4, 6, 4};
  return {5, 9, 6, 4, 9, 16, 3, 5, 12, 10, 9, 8, 3, 6, 5, 7, 5};
}

CheckOutcome pass(std::string detail) { return {true, std::move(detail), {}}; }
CheckOutcome fail(std::string detail, std::string counterexample) {
  return {false, std::move(detail), std::move(counterexample)};
}

std::string mu_label(const Partition& mu) { return "mu=" + mu.to_string(); }

// Catalan numbers by C_{n+1} = sum C_i C_{n-i}, independent of the closed form.
std::vector<Integer> catalan_by_recurrence(int count) {
  std::vector<Integer> c{Integer(1)};
  for (int n = 0; n < count; ++n) {
    Integer next(0);
    for (int i = 0; i <= n; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
    c.push_back(next);
  }
  return c;
}

CheckOutcome check_theorem1(const Grid& g) {
  std::map<Partition, IntPoly> polys;
  int cases = 0;
  for (int p = 1; p <= g.theorem_side; ++p) {
    for (int q = 1; q <= g.theorem_side; ++q) {
      const Partition rect = Partition::rectangle(p, q);
      for (int k = 1; k <= std::min(g.theorem_k, p * q); ++k) {
        for (const Partition& mu : partitions_of(k)) {
          auto it = polys.find(mu);
          if (it == polys.end()) it = polys.emplace(mu, factorization_poly(mu, std::max(g.theorem_k, kDefaultEnumerationCap))).first;
          const std::vector<Integer> point{Integer(p), Integer(q)};
          ++cases;
          if (normalized_character(rect, mu) != Rational(it->second.evaluate<Integer>(point))) {
            return fail("character and factorization sum differ",
                        "p=" + std::to_string(p) + " q=" + std::to_string(q) + " " + mu_label(mu));
          }
        }
      }
    }
  }
  return pass(std::to_string(cases) + " (p, q, mu) cases");
}

CheckOutcome check_lemma(const Grid& g) {
  int cases = 0;
  for (int p = 1; p <= g.box_side; ++p) {
    for (int q = 1; q <= g.box_side; ++q) {
      for (const Partition& lambda : partitions_in_box(p, q)) {
        ++cases;
        if (!lemma_check(lambda, p, q)) {
          return fail("hook product identity fails",
                      "p=" + std::to_string(p) + " q=" + std::to_string(q) + " lambda=" + lambda.to_string());
        }
      }
    }
  }
  return pass(std::to_string(cases) + " shapes, " + std::to_string(partitions_in_box(5, 5).size()) +
              " inside 5x5");
}

CheckOutcome check_hooks(const Grid& g) {
  int cases = 0;
  for (int p = 1; p <= g.box_side; ++p) {
    for (int q = 1; q <= g.box_side; ++q) {
      for (const Partition& lambda : partitions_in_box(p, q)) {
        ++cases;
        const std::string where = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " lambda=" + lambda.to_string();
        if (!sq_hook_multiset_check(lambda, p, q)) return fail("hook multiset union fails", where);
        if (!sq_hook_product_check(lambda, p, q)) return fail("content product identity fails", where);
      }
    }
  }
  return pass(std::to_string(cases) + " shapes");
}

CheckOutcome check_golden() {
  for (int k = 1; k <= 4; ++k) {
    const IntPoly flipped = flip_signs(f_k_polynomial(2, k), k);
    if (!(flipped == golden_flipped(k))) {
      return fail("computed " + to_string(flipped, two_rectangle_names()), "m=2 k=" + std::to_string(k));
    }
  }
  Exponents e{};
  e[0] = 1;  // a
  e[1] = 2;  // p
  e[3] = 2;  // q
  const Integer c = flip_signs(f_k_polynomial(2, 4), 4).coefficient(e);
  if (c != 14) return fail("coefficient of a p^2 q^2 is " + to_string(c), "m=2 k=4");
  return pass("F_1..F_4 match, [a p^2 q^2] = 14");
}

CheckOutcome check_special_value(const Grid& g) {
  for (int m = 1; m <= g.special_m; ++m) {
    for (int k = 1; k <= g.special_k; ++k) {
      const std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
      if (!integrality_witness(m, k)) return fail("residue not divisible by k", where);
      const Integer value = f_k_special_value(m, k);
      const Integer expected = falling_factorial(Integer(k + m - 1), k);
      if (value != expected) return fail("got " + to_string(value) + ", expected " + to_string(expected), where);
    }
  }
  return pass("m <= " + std::to_string(g.special_m) + ", k <= " + std::to_string(g.special_k));
}

CheckOutcome check_frobenius(const Grid& g) {
  int cases = 0;
  for (int n = 1; n <= g.frobenius_n; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int k = 1; k <= n; ++k) {
        ++cases;
        if (frobenius_normalized(lambda, k) != normalized_character(lambda, Partition({k}))) {
          return fail("residue formula disagrees with the character",
                      "lambda=" + lambda.to_string() + " k=" + std::to_string(k));
        }
      }
    }
  }
  return pass(std::to_string(cases) + " (lambda, k) cases");
}

CheckOutcome check_leading(const Grid& g) {
  for (int m = 1; m <= g.lagrange_m; ++m) {
    for (int k = 1; k <= g.lagrange_k; ++k) {
      if (!(g_k_leading(m, k) == g_k_via_lagrange(m, k))) {
        return fail("top-degree part differs from the Lagrange route", "m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
    if (!gk_generating_check(m, g.lagrange_k)) {
      return fail("generating function disagrees", "m=" + std::to_string(m) + " kmax=" + std::to_string(g.lagrange_k));
    }
  }
  return pass("m <= " + std::to_string(g.lagrange_m) + ", k <= " + std::to_string(g.lagrange_k));
}

CheckOutcome check_specializations(const Grid& g) {
  const auto catalan = catalan_by_recurrence(g.catalan_k);
  const auto s1 = s_k_sequence(1, g.catalan_k);
  for (int k = 1; k <= g.catalan_k; ++k) {
    if (s1[static_cast<std::size_t>(k - 1)] != catalan[static_cast<std::size_t>(k)]) {
      return fail("S_k is not Catalan", "m=1 k=" + std::to_string(k));
    }
  }
  if (!narayana_check(g.catalan_k)) return fail("Narayana form fails", "m=1 kmax=" + std::to_string(g.catalan_k));
  const auto by_sum = s_k_sequence(2, g.schroder_k);
  const auto by_inverse = s_k_via_inverse(2, g.schroder_k);
  for (int k = 1; k <= g.schroder_k; ++k) {
    if (by_sum[static_cast<std::size_t>(k - 1)] != by_inverse[static_cast<std::size_t>(k - 1)]) {
      return fail("coefficient sum " + to_string(by_sum[static_cast<std::size_t>(k - 1)]) + " vs series " +
                      to_string(by_inverse[static_cast<std::size_t>(k - 1)]),
                  "m=2 k=" + std::to_string(k));
    }
  }
  return pass("Catalan and Narayana to k=" + std::to_string(g.catalan_k) + ", m=2 routes agree to k=" +
              std::to_string(g.schroder_k));
}

CheckOutcome check_pairs(const Grid& g) {
  const int cap = std::max(g.pairs_k, kDefaultEnumerationCap);
  const auto catalan = catalan_by_recurrence(g.pairs_k);
  for (int k = 1; k <= g.pairs_k; ++k) {
    const Integer count = catalan_pair_count(k, cap);
    if (count != catalan[static_cast<std::size_t>(k)]) {
      return fail("pair count " + to_string(count), "k=" + std::to_string(k));
    }
  }
  for (int k = 1; k <= g.refinement_k; ++k) {
    for (const auto& [i, count] : narayana_refinement(k, cap)) {
      if (count != narayana_number(k, i)) {
        return fail("refined count " + to_string(count), "k=" + std::to_string(k) + " i=" + std::to_string(i));
      }
    }
  }
  return pass("k <= " + std::to_string(g.pairs_k));
}

CheckOutcome check_elizalde(const Grid& g) {
  for (int m = 1; m <= g.elizalde_m; ++m) {
    for (int k = 1; k <= g.elizalde_k; ++k) {
      const RatPoly expected = convert_coefficients<Rational>(flip_signs(g_k_leading(m, k), k));
      const RatPoly formula = elizalde_formula(m, k);
      if (!(formula == expected)) {
        const RatPoly diff = formula - expected;
        return fail("formula minus oracle, reading r_s = r: " + to_string(diff, rect_variable_names(m)),
                    "m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
  }
  return pass("m <= " + std::to_string(g.elizalde_m) + ", k <= " + std::to_string(g.elizalde_k) +
              " with r_s read as r");
}

CheckOutcome check_conjecture(const Grid& g) {
  int shapes = 0;
  for (int k = 1; k <= g.conjecture_k; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      const std::string where = "m=2 " + mu_label(mu);
      const ConjectureReport report = conjecture1_check(2, mu);
      if (!report.integer_coefficients) return fail("non-integer coefficient", where);
      if (!report.nonnegative) return fail("negative coefficient after the sign flip", where);
      if (!report.sum_matches) return fail("coefficient sum " + to_string(report.coefficient_sum), where);
      if (mu == Partition({k})) {
        if (k <= 4 && !(report.flipped == convert_coefficients<Rational>(golden_flipped(k)))) {
          return fail("single cycle differs from the published data", where);
        }
        if (!(report.polynomial == convert_coefficients<Rational>(f_k_polynomial(2, k)))) {
          return fail("single cycle differs from F_k", where);
        }
      }
      const FidelityReport fidelity = interpolation_fidelity(2, mu, report.polynomial, 20, 0x5eed0000ULL + static_cast<unsigned>(k));
      if (fidelity.mismatches != 0) return fail("off-grid mismatch", where + " shape=" + fidelity.failures.front());
      ++shapes;
    }
  }
  return pass(std::to_string(shapes) + " cycle types, 20 off-grid shapes each");
}

CheckOutcome check_sss(const Grid& g) {
  int cases = 0;
  for (int k = 1; k <= g.sss_k; ++k) {
    for (const Partition& mu : partitions_of(k)) {
      const IntPoly poly = factorization_poly(mu);
      for (int p = 1; p <= g.sss_side; ++p) {
        for (int q = 1; q <= g.sss_side; ++q) {
          ++cases;
          const std::vector<Integer> point{Integer(p), Integer(q)};
          if (schur_side(p, q, mu) != Rational(poly.evaluate<Integer>(point))) {
            return fail("Schur side differs from the factorization sum",
                        "p=" + std::to_string(p) + " q=" + std::to_string(q) + " " + mu_label(mu));
          }
        }
      }
    }
  }
  return pass(std::to_string(cases) + " (p, q, mu) cases");
}

std::string range(const char* name, int hi) { return std::string(name) + "<=" + std::to_string(hi); }

}  // namespace

std::vector<Criterion> acceptance_criteria(VerifyLevel level) {
  const Grid g = grid_for(level);
  auto join = [](std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& part : parts) out += (out.empty() ? "" : " ") + part;
    return out;
  };
  return {
      {1, "theorem1", join({range("p,q", g.theorem_side), range("k", g.theorem_k)}), 60,
       [g] { return check_theorem1(g); }},
      {2, "lemma", range("p,q", g.box_side), 5, [g] { return check_lemma(g); }},
      {3, "hooks", range("p,q", g.box_side), 5, [g] { return check_hooks(g); }},
      {4, "golden_fk", "m=2 k=1..4", 10, [] { return check_golden(); }},
      {5, "special_value", join({range("m", g.special_m), range("k", g.special_k)}), 30,
       [g] { return check_special_value(g); }},
      {6, "frobenius", range("n", g.frobenius_n), 60, [g] { return check_frobenius(g); }},
      {7, "leading_terms", join({range("m", g.lagrange_m), range("k", g.lagrange_k)}), 30,
       [g] { return check_leading(g); }},
      {8, "specializations", join({"m=1", range("k", g.catalan_k), "m=2", range("k", g.schroder_k)}), 60,
       [g] { return check_specializations(g); }},
      {9, "catalan_pairs", join({range("k", g.pairs_k), "refinement", range("k", g.refinement_k)}), 60,
       [g] { return check_pairs(g); }},
      {10, "elizalde", join({range("m", g.elizalde_m), range("k", g.elizalde_k)}), 60,
       [g] { return check_elizalde(g); }},
      {11, "conjecture", join({"m=2", range("k", g.conjecture_k)}), 600, [g] { return check_conjecture(g); }},
      {12, "sss_identity", join({range("k", g.sss_k), range("p,q", g.sss_side)}), 60, [g] { return check_sss(g); }},
  };
}

CheckResult run_criterion(const Criterion& criterion) {
  CheckResult result;
  result.id = criterion.id;
  result.name = criterion.name;
  result.parameters = criterion.parameters;
  result.budget_seconds = criterion.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome outcome;
  try {
    outcome = criterion.run();
  } catch (const std::exception& e) {
    outcome = fail(std::string("exception: ") + e.what(), criterion.parameters);
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = outcome.passed;
  result.detail = outcome.detail;
  result.counterexample = outcome.counterexample;
  if (result.passed && result.elapsed_seconds > result.budget_seconds) {
    result.passed = false;
    result.detail += "; over the time budget";
    result.counterexample = criterion.parameters;
  }
  return result;
}

VerifyReport run_verify(VerifyLevel level, const std::vector<int>& only,
                        const std::function<void(const CheckResult&)>& on_result) {
  VerifyReport report;
  for (const Criterion& criterion : acceptance_criteria(level)) {
    if (!only.empty() && std::find(only.begin(), only.end(), criterion.id) == only.end()) continue;
    report.checks.push_back(run_criterion(criterion));
    if (on_result) on_result(report.checks.back());
  }
  return report;
}

std::string format_result(const CheckResult& result) {
  std::ostringstream out;
  out << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.name << " (" << result.parameters
      << ") " << std::fixed << std::setprecision(2) << result.elapsed_seconds << "s: " << result.detail;
  if (!result.passed) out << " | reproduce with " << result.counterexample;
  return out.str();
}

}  // namespace rectchar
