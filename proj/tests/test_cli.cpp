#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

#include "cli.hpp"
#include "starclt/algebra.hpp"

using namespace starclt;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "starclt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MomentsText) {
  const auto r = run_cli({"moments", "--weights", "1/2,1/2", "--max-order", "4"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("15/16"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("all routes agree"), std::string::npos);
}

TEST(Cli, MomentsJsonSchema) {
  const auto r = run_cli({"moments", "--weights", "2/3,1/3", "--max-order", "6", "--format",
                          "json", "--routes", "A,C"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("weights").size(), 2u);
  EXPECT_EQ(j["weights"][0]["num"], "2");
  EXPECT_EQ(j["weights"][0]["den"], "3");
  ASSERT_EQ(j.at("moments").size(), 7u);
  const auto& row = j["moments"][4];
  EXPECT_EQ(row["k"], 4);
  EXPECT_TRUE(row["agree"].get<bool>());
  EXPECT_EQ(row["routes"]["A"]["num"], "64");
  EXPECT_EQ(row["routes"]["A"]["den"], "81");
  EXPECT_EQ(row["routes"]["C"], row["routes"]["A"]);
  EXPECT_FALSE(row["routes"].contains("B"));
  EXPECT_FALSE(row.contains("elapsed_ms"));
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (const char* format : {"text", "json", "csv"}) {
    const auto one = run_cli({"moments", "--weights", "1/2,1/3,1/6", "--max-order", "6",
                              "--format", format, "--threads", "1"});
    const auto four = run_cli({"moments", "--weights", "1/2,1/3,1/6", "--max-order", "6",
                               "--format", format, "--threads", "4"});
    ASSERT_EQ(one.code, cli::kOk);
    EXPECT_EQ(one.out, four.out) << format;
  }
}

TEST(Cli, TimingsAreOptIn) {
  const auto r = run_cli({"moments", "--weights", "1/2,1/2", "--max-order", "2", "--format",
                          "json", "--timings"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["moments"][2].contains("elapsed_ms"));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"moments", "--weights", "1/2,1/4"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"moments", "--weights", "1/2,1/2", "--routes", "A,E"}).code,
            cli::kInputError);
  EXPECT_EQ(run_cli({"moments", "--weights", "1/2,1/2", "--format", "xml"}).code,
            cli::kInputError);
  EXPECT_EQ(run_cli({"moments"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"converge", "--weights", "1/2,1/2", "--k", "3"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"verify", "--weights", "2/3,1/3", "--gue"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"verify", "--weights", "1/2,1/2", "--profile", "huge"}).code,
            cli::kInputError);
  const auto r = run_cli({"moments", "--weights", "1/2,1/4"});
  EXPECT_NE(r.err.find("sum to 1"), std::string::npos) << r.err;
}

TEST(Cli, InfeasibleOrders) {
  EXPECT_EQ(run_cli({"moments", "--weights", "1/2,1/2", "--max-order", "13"}).code,
            cli::kInfeasible);
  EXPECT_EQ(run_cli({"moments", "--weights", "1/2,1/2", "--max-order", "10", "--order-cap",
                     "8"})
                .code,
            cli::kInfeasible);
}

TEST(Cli, VerifyPasses) {
  const auto r = run_cli({"verify", "--weights", "1/3,1/3,1/3", "--profile", "quick", "--gue"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, ConvergeSecondMomentHasNoGap) {
  const auto r = run_cli({"converge", "--weights", "1/2,1/3,1/6", "--k", "2", "--n", "1,5,50",
                          "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 3u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["gap"]["num"], "0");
}

TEST(Cli, ConvergeRowsShrink) {
  const auto rows = cli::compute_convergence(WeightVector::parse("2/3,1/3"), 4, {8, 32});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_LT(rows[1].gap, rows[0].gap);
}
