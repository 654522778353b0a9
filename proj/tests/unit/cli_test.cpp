#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/job.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sumprod");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Golden {
  std::vector<std::string> args;
  int code;
};

TEST(CliTest, ExitCodeContract) {
  const std::vector<Golden> suite = {
      {{"verify", "--lemma", "L1", "--p", "7", "--mode", "exhaustive"}, kExitOk},
      {{"verify", "--lemma", "L3", "--p", "5", "--mode", "exhaustive", "--format", "text"}, kExitOk},
      {{"verify", "--lemma", "L4", "--p", "101", "--samples", "50", "--seed", "42"}, kExitOk},
      {{"construct", "--p", "5", "--set", "{0,1,2}", "--n", "2", "--eps", "0.5"}, kExitOk},
      {{"construct", "--p", "101", "--set", "{0..30}", "--n", "2", "--eps", "0.5"}, kExitOk},
      {{"subgroup", "--p", "7", "--order", "3"}, kExitOk},
      {{"bench", "--p", "101", "--samples", "5"}, kExitOk},
      {{"construct", "--p", "7", "--set", "{1,2}", "--n", "2", "--eps", "1.9"}, kExitFailure},
      {{"subgroup", "--p", "7", "--order", "1"}, kExitFailure},
      {{"verify", "--lemma", "L99", "--p", "7"}, kExitUsage},
      {{"verify", "--lemma", "L1", "--p", "9"}, kExitUsage},
      {{"verify", "--lemma", "L1", "--p", "2"}, kExitUsage},
      {{"verify", "--lemma", "L1", "--p", "7", "--mode", "exhaustive", "--seed", "3"}, kExitUsage},
      {{"verify", "--lemma", "L1", "--p", "7", "--mode", "sometimes"}, kExitUsage},
      {{"verify", "--lemma", "L1"}, kExitUsage},
      {{"verify", "--lemma", "L1", "--p", "7", "--bogus"}, kExitUsage},
      {{"construct", "--p", "7", "--set", "{}", "--n", "2", "--eps", "0.5"}, kExitUsage},
      {{"construct", "--p", "7", "--set", "{1,2", "--n", "2", "--eps", "0.5"}, kExitUsage},
      {{"construct", "--p", "7", "--set", "{1,2}", "--n", "2", "--eps", "3"}, kExitUsage},
      {{"subgroup", "--p", "7", "--order", "4"}, kExitUsage},
      {{}, kExitUsage},
      {{"verify", "--lemma", "L7", "--p", "11", "--mode", "exhaustive"}, kExitBudget},
      {{"verify", "--lemma", "L1", "--p", "5", "--mode", "exhaustive", "--budget", "10"}, kExitBudget},
      {{"construct", "--p", "5", "--set", "{0,1,2}", "--n", "2", "--eps", "0.5", "--budget", "8"},
       kExitBudget},
  };
  for (const auto& g : suite) {
    std::string line;
    for (const auto& a : g.args) line += a + " ";
    EXPECT_EQ(run(g.args).code, g.code) << line;
  }
}

TEST(CliTest, VerifyJsonMatchesSchemaAndIsByteStable) {
  const std::vector<std::string> args = {"verify", "--lemma", "C6", "--p", "101", "--samples",
                                         "40", "--seed", "9", "--no-timing"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(harness::report_schema_violation(j), "");
  EXPECT_EQ(j["seed"], "9");
  EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(CliTest, ConstructJsonWitness) {
  const auto r = run({"construct", "--p", "5", "--set", "{0..2}", "--n", "2", "--eps", "0.5"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], 1);
  EXPECT_EQ(j["N"], 16);
  EXPECT_EQ(j["cover_verified"], true);
  EXPECT_EQ(j["set"], (std::vector<int>{0, 1, 2}));
}

// Criterion-level golden from the reference example; the growth hypothesis
// rejects it, so this documents the refusal rather than a Case 3 witness.
TEST(CliTest, IntervalOfElevenModHundredOneIsRefused) {
  const auto r = run({"construct", "--p", "101", "--set", "{1..11}", "--n", "2", "--eps", "0.5"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("HypothesisViolated"), std::string::npos);
}

TEST(CliTest, SubgroupAndBenchJson) {
  const auto s = nlohmann::json::parse(run({"subgroup", "--p", "7", "--order", "3"}).out);
  EXPECT_EQ(s["elements"], (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(s["verified"], true);
  const auto b = nlohmann::json::parse(run({"bench", "--p", "1009", "--samples", "10"}).out);
  EXPECT_EQ(b["agree"], true);
  EXPECT_EQ(b["samples"], 10);
}

TEST(CliTest, CsvAndTextFormats) {
  const auto csv = run({"verify", "--lemma", "L7", "--p", "5", "--samples", "3", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
  const auto text = run({"construct", "--p", "5", "--set", "{0,1,2}", "--n", "2", "--eps", "0.5",
                         "--format", "text"});
  EXPECT_NE(text.out.find("case 1"), std::string::npos);
}

TEST(CliTest, WritesToOutputPath) {
  const auto path = std::filesystem::temp_directory_path() / "sumprod_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run({"subgroup", "--p", "7", "--order", "6", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["verified"], true);
  std::filesystem::remove(path);
}

TEST(CliTest, ValidateRejectsExtraneousFields) {
  JobConfig c;
  c.command = Command::Construct;
  c.p = 7;
  c.set_literal = "{1}";
  c.n = 2;
  c.eps = 0.5;
  EXPECT_EQ(validate(c), "");
  c.lemma = "L1";
  EXPECT_NE(validate(c), "");
  c.lemma.reset();
  c.samples = 3;
  EXPECT_NE(validate(c), "");
}

}  // namespace
}  // namespace sumprod::cli
