#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "rectchar/multivar_poly.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = rectchar::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Character) {
  const Result r = run({"chi", "--shape", "3,3", "--type", "3,1,1,1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run({"chi", "--p", "2", "--q", "3", "--type", "1,1,1,1,1,1"}).out, "5\n");
}

TEST(Cli, Normalized) {
  EXPECT_EQ(run({"normalized", "--shape", "2,2", "--mu", "2"}).out, "0\n");
  EXPECT_EQ(run({"normalized", "--p", "2", "--q", "3", "--mu", "2"}).out, "6\n");
  EXPECT_EQ(run({"normalized", "--shape", "3,3", "--mu", "3", "--method", "frobenius"}).out,
            run({"normalized", "--shape", "3,3", "--mu", "3"}).out);
}

TEST(Cli, Theorem1) {
  EXPECT_EQ(run({"theorem1", "--mu", "2", "--poly"}).out, "-p^2*q + p*q^2\n");
  const Result check = run({"theorem1", "--mu", "2,1", "--p", "3", "--q", "4"});
  EXPECT_EQ(check.status, 0);
  EXPECT_EQ(check.out.rfind("PASS", 0), 0U);
  EXPECT_EQ(run({"theorem1", "--mu", "3", "--p", "1", "--q", "2"}).status, 2);
}

TEST(Cli, PolynomialJsonRoundTrips) {
  const Result r = run({"fk", "--m", "2", "--k", "3", "--flip", "--json"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto names = doc["polynomial"]["variables"].get<std::vector<std::string>>();
  EXPECT_EQ(names, (std::vector<std::string>{"p1", "p2", "q1", "q2"}));
  const auto poly = rectchar::poly_from_json<rectchar::Integer>(doc["polynomial"]["terms"], 4);
  EXPECT_EQ(rectchar::to_string(poly, names), doc["polynomial"]["text"].get<std::string>());
  // the text form prints the same polynomial
  EXPECT_EQ(run({"fk", "--m", "2", "--k", "3", "--flip"}).out, doc["polynomial"]["text"].get<std::string>() + "\n");
}

TEST(Cli, LeadingTermsAndSequences) {
  EXPECT_EQ(run({"gk", "--m", "1", "--k", "2", "--flip"}).out, "p^2*q + p*q^2\n");
  EXPECT_EQ(run({"gk", "--m", "2", "--k", "3", "--flip"}).out, run({"gk", "--m", "2", "--k", "3", "--flip", "--lagrange"}).out);
  EXPECT_EQ(run({"sk", "--m", "1", "--kmax", "5"}).out, "1 2 5 14 42\n");
  EXPECT_EQ(run({"sk", "--m", "2", "--kmax", "4", "--route", "series"}).out, "2 6 22 90\n");
  EXPECT_EQ(run({"narayana", "--kmax", "4"}).status, 0);
  EXPECT_EQ(run({"elizalde", "--m", "2", "--k", "3"}).status, 0);
}

TEST(Cli, CatalanPairs) {
  const Result r = run({"catalan-pairs", "--k", "4", "--refine", "--json"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["count"], "14");
  EXPECT_EQ(doc["refinement"]["2"], "6");
  EXPECT_EQ(run({"catalan-pairs", "--k", "12"}).status, 2);
}

TEST(Cli, BoxChecks) {
  EXPECT_EQ(run({"lemma", "--p", "3", "--q", "4"}).status, 0);
  EXPECT_EQ(run({"hooks", "--p", "3", "--q", "3", "--shape", "2,1"}).status, 0);
}

TEST(Cli, Conjecture) {
  const Result r = run({"conjecture", "--m", "2", "--mu", "1,1", "--json"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["coefficient_sum"], "6");
  EXPECT_EQ(doc["expected_sum"], "6");
  EXPECT_EQ(doc["fidelity_mismatches"], 0);
}

TEST(Cli, VerifySubset) {
  const Result r = run({"verify", "--quick", "--only", "2,4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS [2]"), std::string::npos);
  EXPECT_NE(r.out.find("PASS [4]"), std::string::npos);
  EXPECT_EQ(r.out.find("[3]"), std::string::npos);
  const auto doc = nlohmann::json::parse(run({"verify", "--only", "4", "--json"}).out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["checks"].size(), 1U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"chi", "--shape", "3,3"}).status, 2);
  EXPECT_EQ(run({"chi", "--shape", "3,3", "--type", "2", "--bogus"}).status, 2);
  EXPECT_EQ(run({"fk", "--m", "0", "--k", "2"}).status, 2);
  EXPECT_EQ(run({"normalized", "--shape", "2,x", "--mu", "1"}).status, 2);
  EXPECT_EQ(run({"verify", "--quick", "--full"}).status, 2);
  const Result help = run({"--help"});
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("theorem1"), std::string::npos);
}
