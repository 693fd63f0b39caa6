#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectchar/character.hpp"
#include "rectchar/frobenius.hpp"
#include "rectchar/interpolation.hpp"
#include "rectchar/leading_terms.hpp"
#include "rectchar/partition.hpp"
#include "rectchar/rect_theorem.hpp"
#include "rectchar/schur.hpp"
#include "rectchar/verify.hpp"

namespace rectchar::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string shape;
  std::string type;
  std::string mu;
  int p = 0;
  int q = 0;
  int m = 0;
  int k = 0;
  int kmax = 0;
  int cap = kDefaultEnumerationCap;
  int samples = 20;
  std::uint64_t seed = 1;
  bool json = false;
  bool flip = false;
  bool poly = false;
  bool lagrange = false;
  bool refine = false;
  bool full = false;
  std::string method = "mn";
  std::string route = "sum";
  std::vector<int> only;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

json poly_json(const IntPoly& poly, const std::vector<std::string>& names) {
  return {{"variables", std::vector<std::string>(names.begin(), names.begin() + poly.variables())},
          {"terms", to_json(poly)},
          {"text", to_string(poly, names)}};
}

json poly_json(const RatPoly& poly, const std::vector<std::string>& names) {
  return {{"variables", std::vector<std::string>(names.begin(), names.begin() + poly.variables())},
          {"terms", to_json(poly)},
          {"text", to_string(poly, names)}};
}

// --shape wins; otherwise --p and --q give a rectangle.
Partition shape_from(const Options& o) {
  if (!o.shape.empty()) return Partition::parse(o.shape);
  if (o.p > 0 && o.q > 0) return Partition::rectangle(o.p, o.q);
  throw std::invalid_argument("give --shape or both --p and --q");
}

void require_positive(int value, const char* flag) {
  if (value < 1) throw std::invalid_argument(std::string(flag) + " must be a positive integer");
}

int emit(const Io& io, const Options& o, const json& payload, const std::string& text, bool ok) {
  if (o.json) {
    io.out << payload.dump(2) << '\n';
  } else {
    io.out << text << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_chi(const Io& io, const Options& o) {
  const Partition shape = shape_from(o);
  const Partition type = Partition::parse(o.type);
  const Integer value = mn_character(shape, type);
  return emit(io, o, {{"shape", shape.to_string()}, {"type", type.to_string()}, {"value", to_string(value)}},
              to_string(value), true);
}

int cmd_normalized(const Io& io, const Options& o) {
  const Partition shape = shape_from(o);
  const Partition mu = Partition::parse(o.mu);
  Rational value;
  if (o.method == "frobenius") {
    if (mu.length() != 1) throw std::invalid_argument("--method frobenius needs a single cycle --mu k");
    value = frobenius_normalized(shape, mu.size());
  } else if (o.method == "mn") {
    value = normalized_character(shape, mu);
  } else {
    throw std::invalid_argument("--method must be mn or frobenius");
  }
  return emit(io, o, {{"shape", shape.to_string()}, {"mu", mu.to_string()}, {"value", to_string(value)}},
              to_string(value), true);
}

int cmd_theorem1(const Io& io, const Options& o) {
  const Partition mu = Partition::parse(o.mu);
  const std::vector<std::string> names{"p", "q"};
  const IntPoly poly = factorization_poly(mu, o.cap);
  if (o.p == 0 && o.q == 0) {
    return emit(io, o, {{"mu", mu.to_string()}, {"polynomial", poly_json(poly, names)}}, to_string(poly, names), true);
  }
  require_positive(o.p, "--p");
  require_positive(o.q, "--q");
  if (mu.size() > o.p * o.q) throw std::invalid_argument("|mu| exceeds pq");
  const Rational character = normalized_character(Partition::rectangle(o.p, o.q), mu);
  const Integer sum = poly.evaluate<Integer>(std::vector<Integer>{Integer(o.p), Integer(o.q)});
  const bool ok = character == Rational(sum);
  std::ostringstream text;
  text << (ok ? "PASS" : "FAIL") << " p=" << o.p << " q=" << o.q << " mu=" << mu.to_string()
       << " character=" << to_string(character) << " factorization_sum=" << to_string(sum);
  if (o.poly) text << "\n" << to_string(poly, names);
  json payload{{"mu", mu.to_string()},           {"p", o.p},
               {"q", o.q},                       {"character", to_string(character)},
               {"factorization_sum", to_string(sum)}, {"passed", ok}};
  if (o.poly) payload["polynomial"] = poly_json(poly, names);
  return emit(io, o, payload, text.str(), ok);
}

int box_sweep(const Io& io, const Options& o, const char* what,
              const std::function<bool(const Partition&, int, int)>& check) {
  require_positive(o.p, "--p");
  require_positive(o.q, "--q");
  std::vector<Partition> shapes;
  if (o.shape.empty()) {
    shapes = partitions_in_box(o.p, o.q);
  } else {
    shapes.push_back(Partition::parse(o.shape));
  }
  json failures = json::array();
  for (const Partition& lambda : shapes) {
    if (!check(lambda, o.p, o.q)) failures.push_back(lambda.to_string());
  }
  const bool ok = failures.empty();
  std::ostringstream text;
  text << (ok ? "PASS" : "FAIL") << ' ' << what << " p=" << o.p << " q=" << o.q << " shapes=" << shapes.size();
  if (!ok) text << " failing=" << failures.dump();
  return emit(io, o, {{"check", what}, {"p", o.p}, {"q", o.q}, {"shapes", shapes.size()}, {"failures", failures},
                      {"passed", ok}},
              text.str(), ok);
}

int cmd_fk(const Io& io, const Options& o) {
  require_positive(o.m, "--m");
  require_positive(o.k, "--k");
  IntPoly poly = f_k_polynomial(o.m, o.k);
  if (o.flip) poly = flip_signs(poly, o.k);
  const auto names = rect_variable_names(o.m);
  return emit(io, o, {{"m", o.m}, {"k", o.k}, {"flipped", o.flip}, {"polynomial", poly_json(poly, names)}},
              to_string(poly, names), true);
}

int cmd_gk(const Io& io, const Options& o) {
  require_positive(o.m, "--m");
  require_positive(o.k, "--k");
  IntPoly poly = o.lagrange ? g_k_via_lagrange(o.m, o.k) : g_k_leading(o.m, o.k);
  if (o.flip) poly = flip_signs(poly, o.k);
  const auto names = rect_variable_names(o.m);
  return emit(io, o,
              {{"m", o.m},
               {"k", o.k},
               {"flipped", o.flip},
               {"route", o.lagrange ? "lagrange" : "leading"},
               {"polynomial", poly_json(poly, names)}},
              to_string(poly, names), true);
}

int cmd_sk(const Io& io, const Options& o) {
  require_positive(o.m, "--m");
  require_positive(o.kmax, "--kmax");
  std::vector<Integer> values;
  if (o.route == "sum") {
    values = s_k_sequence(o.m, o.kmax);
  } else if (o.route == "series") {
    values = s_k_via_inverse(o.m, o.kmax);
  } else {
    throw std::invalid_argument("--route must be sum or series");
  }
  std::vector<std::string> strings;
  for (const Integer& v : values) strings.push_back(to_string(v));
  std::string text;
  for (const auto& s : strings) text += (text.empty() ? "" : " ") + s;
  return emit(io, o, {{"m", o.m}, {"route", o.route}, {"values", strings}}, text, true);
}

int cmd_narayana(const Io& io, const Options& o) {
  require_positive(o.kmax, "--kmax");
  const bool ok = narayana_check(o.kmax);
  json rows = json::array();
  std::ostringstream text;
  text << (ok ? "PASS" : "FAIL") << " narayana kmax=" << o.kmax;
  for (int k = 1; k <= o.kmax; ++k) {
    std::vector<std::string> row;
    text << "\nk=" << k << ':';
    for (int i = 1; i <= k; ++i) {
      row.push_back(to_string(narayana_number(k, i)));
      text << ' ' << row.back();
    }
    rows.push_back(row);
  }
  return emit(io, o, {{"kmax", o.kmax}, {"passed", ok}, {"rows", rows}}, text.str(), ok);
}

int cmd_elizalde(const Io& io, const Options& o) {
  require_positive(o.m, "--m");
  require_positive(o.k, "--k");
  const auto names = rect_variable_names(o.m);
  const RatPoly formula = elizalde_formula(o.m, o.k);
  const RatPoly oracle = convert_coefficients<Rational>(flip_signs(g_k_leading(o.m, o.k), o.k));
  const bool ok = formula == oracle;
  std::string text = to_string(formula, names);
  if (!ok) text += "\nFAIL differs from the leading terms by " + to_string(formula - oracle, names);
  return emit(io, o,
              {{"m", o.m}, {"k", o.k}, {"polynomial", poly_json(formula, names)}, {"matches_leading_terms", ok}}, text,
              ok);
}

int cmd_catalan_pairs(const Io& io, const Options& o) {
  require_positive(o.k, "--k");
  const Integer count = catalan_pair_count(o.k, o.cap);
  const Integer expected = catalan_number(o.k);
  bool ok = count == expected;
  std::ostringstream text;
  text << to_string(count);
  json payload{{"k", o.k}, {"count", to_string(count)}, {"catalan", to_string(expected)}};
  if (o.refine) {
    json refinement = json::object();
    for (const auto& [i, c] : narayana_refinement(o.k, o.cap)) {
      refinement[std::to_string(i)] = to_string(c);
      ok = ok && c == narayana_number(o.k, i);
      text << "\ni=" << i << ": " << to_string(c);
    }
    payload["refinement"] = refinement;
  }
  payload["passed"] = ok;
  if (!ok) text << "\nFAIL expected Catalan " << to_string(expected) << " and Narayana counts";
  return emit(io, o, payload, text.str(), ok);
}

int cmd_conjecture(const Io& io, const Options& o) {
  require_positive(o.m, "--m");
  const Partition mu = Partition::parse(o.mu);
  const auto names = rect_variable_names(o.m);
  const ConjectureReport report = conjecture1_check(o.m, mu);
  const FidelityReport fidelity = interpolation_fidelity(o.m, mu, report.polynomial, o.samples, o.seed);
  const bool ok = report.passed() && fidelity.mismatches == 0;
  std::ostringstream text;
  text << "F = " << to_string(report.polynomial, names) << "\nflipped = " << to_string(report.flipped, names)
       << "\ninteger_coefficients=" << report.integer_coefficients << " nonnegative=" << report.nonnegative
       << " coefficient_sum=" << to_string(report.coefficient_sum) << " expected=" << to_string(report.expected_sum)
       << " fidelity=" << (fidelity.samples - fidelity.mismatches) << '/' << fidelity.samples << "\n"
       << (ok ? "PASS" : "FAIL");
  return emit(io, o,
              {{"m", o.m},
               {"mu", mu.to_string()},
               {"polynomial", poly_json(report.polynomial, names)},
               {"flipped", poly_json(report.flipped, names)},
               {"integer_coefficients", report.integer_coefficients},
               {"nonnegative", report.nonnegative},
               {"coefficient_sum", to_string(report.coefficient_sum)},
               {"expected_sum", to_string(report.expected_sum)},
               {"sum_matches", report.sum_matches},
               {"fidelity_samples", fidelity.samples},
               {"fidelity_mismatches", fidelity.mismatches},
               {"fidelity_failures", fidelity.failures},
               {"passed", ok}},
              text.str(), ok);
}

int cmd_verify(const Io& io, const Options& o) {
  const VerifyLevel level = o.full ? VerifyLevel::kFull : VerifyLevel::kQuick;
  std::function<void(const CheckResult&)> progress;
  if (!o.json) progress = [&](const CheckResult& r) { io.out << format_result(r) << std::endl; };
  const VerifyReport report = run_verify(level, o.only, progress);
  if (o.json) {
    io.out << report.to_json().dump(2) << '\n';
  } else {
    io.out << (report.passed() ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Characters of rectangular and multi-rectangular shapes"};
  app.name("rectchar");
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "largest k enumerated over S_k")->check(CLI::PositiveNumber);
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "rectangle rows");
    sub->add_option("--q", o.q, "rectangle columns");
  };

  auto* chi = app.add_subcommand("chi", "irreducible character value");
  chi->add_option("--shape", o.shape, "partition, e.g. 3,3");
  add_box(chi);
  chi->add_option("--type", o.type, "cycle type")->required();
  add_json(chi);

  auto* normalized = app.add_subcommand("normalized", "normalized character at (mu, 1^{n-k})");
  normalized->add_option("--shape", o.shape, "partition");
  add_box(normalized);
  normalized->add_option("--mu", o.mu, "partial cycle type")->required();
  normalized->add_option("--method", o.method, "mn or frobenius");
  add_json(normalized);

  auto* theorem1 = app.add_subcommand("theorem1", "factorization polynomial for a rectangle");
  theorem1->add_option("--mu", o.mu, "cycle type")->required();
  add_box(theorem1);
  theorem1->add_flag("--poly", o.poly, "print the polynomial");
  add_cap(theorem1);
  add_json(theorem1);

  auto* lemma = app.add_subcommand("lemma", "hook product identity for shapes in a box");
  add_box(lemma);
  lemma->add_option("--shape", o.shape, "check a single shape");
  add_json(lemma);

  auto* hooks = app.add_subcommand("hooks", "hook multiset of the skew shape SQ");
  add_box(hooks);
  hooks->add_option("--shape", o.shape, "check a single shape");
  add_json(hooks);

  auto* fk = app.add_subcommand("fk", "F_k for m rectangles");
  fk->add_option("--m", o.m)->required();
  fk->add_option("--k", o.k)->required();
  fk->add_flag("--flip", o.flip, "print (-1)^k F_k(p; -q)");
  add_json(fk);

  auto* gk = app.add_subcommand("gk", "degree k+1 part of F_k");
  gk->add_option("--m", o.m)->required();
  gk->add_option("--k", o.k)->required();
  gk->add_flag("--flip", o.flip, "print (-1)^k G_k(p; -q)");
  gk->add_flag("--lagrange", o.lagrange, "compute by Lagrange inversion");
  add_json(gk);

  auto* sk = app.add_subcommand("sk", "S_1..S_kmax");
  sk->add_option("--m", o.m)->required();
  sk->add_option("--kmax", o.kmax)->required();
  sk->add_option("--route", o.route, "sum or series");
  add_json(sk);

  auto* narayana = app.add_subcommand("narayana", "Narayana form of the m = 1 leading terms");
  narayana->add_option("--kmax", o.kmax)->required();
  add_json(narayana);

  auto* elizalde = app.add_subcommand("elizalde", "closed form for the flipped leading terms");
  elizalde->add_option("--m", o.m)->required();
  elizalde->add_option("--k", o.k)->required();
  add_json(elizalde);

  auto* pairs = app.add_subcommand("catalan-pairs", "factorizations of the long cycle");
  pairs->add_option("--k", o.k)->required();
  pairs->add_flag("--refine", o.refine, "split by the cycle count of u");
  add_cap(pairs);
  add_json(pairs);

  auto* conjecture = app.add_subcommand("conjecture", "interpolate F_mu and test the positivity conjecture");
  conjecture->add_option("--m", o.m)->required();
  conjecture->add_option("--mu", o.mu)->required();
  conjecture->add_option("--samples", o.samples, "off-grid shapes to test")->check(CLI::NonNegativeNumber);
  conjecture->add_option("--seed", o.seed);
  add_json(conjecture);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  auto* quick = verify->add_flag("--quick", "acceptance grid (default)");
  verify->add_flag("--full", o.full, "grid extended one notch")->excludes(quick);
  verify->add_option("--only", o.only, "criterion ids")->delimiter(',');
  add_json(verify);

  const std::vector<std::pair<CLI::App*, std::function<int(const Io&, const Options&)>>> handlers{
      {chi, cmd_chi},
      {normalized, cmd_normalized},
      {theorem1, cmd_theorem1},
      {lemma, [](const Io& io, const Options& opt) { return box_sweep(io, opt, "lemma", lemma_check); }},
      {hooks,
       [](const Io& io, const Options& opt) {
         return box_sweep(io, opt, "hooks", [](const Partition& l, int p, int q) {
           return sq_hook_multiset_check(l, p, q) && sq_hook_product_check(l, p, q);
         });
       }},
      {fk, cmd_fk},
      {gk, cmd_gk},
      {sk, cmd_sk},
      {narayana, cmd_narayana},
      {elizalde, cmd_elizalde},
      {pairs, cmd_catalan_pairs},
      {conjecture, cmd_conjecture},
      {verify, cmd_verify},
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Io io{out, err};
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return handler(io, o);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n" << sub->help();
      return kExitUsage;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace rectchar::cli
