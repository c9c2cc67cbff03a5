#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sigma/cli.hpp"
#include "sigma/error.hpp"

using nlohmann::json;
using sigma::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliTest, ParseRange) {
  using V = std::vector<std::int64_t>;
  EXPECT_EQ(sigma::cli::parse_range("2,4..6"), (V{2, 4, 5, 6}));
  EXPECT_EQ(sigma::cli::parse_range("7"), (V{7}));
  EXPECT_THROW(sigma::cli::parse_range(""), sigma::InvalidArgument);
  EXPECT_THROW(sigma::cli::parse_range("5..3"), sigma::InvalidArgument);
  EXPECT_THROW(sigma::cli::parse_range("1,x"), sigma::InvalidArgument);
}

TEST(CliTest, ComputeHeadline) {
  const auto r = call({"compute", "--group", "3,3", "--m", "4", "--h", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["v"], 1);
  EXPECT_EQ(doc["rho"], 7);
  EXPECT_EQ(doc["rho_pm"], 8);
  EXPECT_EQ(doc["u_pm"], 9);
  EXPECT_EQ(doc["conjecture"], 8);
  EXPECT_EQ(doc["match"], true);
  EXPECT_EQ(doc["match_rho"], false);
  EXPECT_EQ(doc["search"]["witness_class"], "asymmetric");
}

TEST(CliTest, ComputeModes) {
  const auto formula = json::parse(call({"compute", "--group", "5,5", "--m", "9", "--mode", "formula"}).out);
  EXPECT_FALSE(formula.contains("rho_pm"));
  EXPECT_EQ(formula["conjecture"], 15);
  const auto search = json::parse(call({"compute", "--group", "12", "--m", "5", "--mode", "search"}).out);
  EXPECT_EQ(search["rho_pm"], 6);
  EXPECT_FALSE(search.contains("bounds"));
  const auto zero = call({"compute", "--group", "12", "--m", "5", "--h", "0", "--mode", "search"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  EXPECT_EQ(json::parse(zero.out)["rho_pm"], 1);
  EXPECT_EQ(call({"compute", "--group", "12", "--m", "5", "--h", "0"}).code, 2);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(call({"compute", "--group", "3,4", "--m", "2"}).code, 2);
  EXPECT_EQ(call({"compute", "--group", "9", "--m", "10"}).code, 2);
  EXPECT_EQ(call({"compute", "--group", "9", "--m", "2", "--h", "65"}).code, 2);
  EXPECT_EQ(call({"compute", "--group", "9", "--m", "2", "--mode", "fast"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"witness", "--group", "9", "--m", "2"}).code, 2);
  EXPECT_EQ(call({"verify", "--check", "nonsense", "--max-order", "8"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliTest, BudgetRefusal) {
  const auto r = call({"compute", "--group", "5,5", "--m", "9", "--budget", "5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(CliTest, BudgetFromEnvironment) {
  ::setenv("SIGMA_SUMSET_BUDGET", "5", 1);
  EXPECT_EQ(call({"compute", "--group", "5,5", "--m", "9"}).code, 3);
  EXPECT_EQ(call({"compute", "--group", "5,5", "--m", "9", "--budget", "100000000"}).code, 0);
  ::setenv("SIGMA_SUMSET_BUDGET", "nope", 1);
  EXPECT_EQ(call({"compute", "--group", "5", "--m", "2"}).code, 2);
  ::unsetenv("SIGMA_SUMSET_BUDGET");
}

TEST(CliTest, Witnesses) {
  const auto cyc = call({"witness", "--construction", "cyclic-R", "--group", "12", "--m", "6", "--d", "6", "--h", "2"});
  ASSERT_EQ(cyc.code, 0) << cyc.err;
  const auto c = json::parse(cyc.out);
  EXPECT_EQ(c["size"], 6);
  EXPECT_EQ(c["class"], "symmetric");
  EXPECT_LE(c["achieved"].get<int>(), c["bound"].get<int>());

  const auto prod = call({"witness", "--construction", "product", "--group", "3,3", "--m", "2,2", "--h", "2"});
  ASSERT_EQ(prod.code, 0) << prod.err;
  const auto p = json::parse(prod.out);
  EXPECT_EQ(p["size"], 4);
  EXPECT_EQ(p["achieved"], 9);

  const auto half = call({"witness", "--construction", "asymmetric-half", "--group", "15", "--m", "7", "--d", "15"});
  ASSERT_EQ(half.code, 0) << half.err;
  const auto a = json::parse(half.out);
  EXPECT_EQ(a["class"], "asymmetric");
  EXPECT_EQ(a["achieved"], 14);
  EXPECT_EQ(a["bound"], 14);

  EXPECT_EQ(call({"witness", "--construction", "cyclic-R", "--group", "3,3", "--m", "2", "--d", "3"}).code, 2);
}

TEST(CliTest, SurveyFormats) {
  const auto csv = call({"survey", "--group", "3,3", "--m", "4", "--h", "2"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out,
            "group;m;h;rho;rho_pm;u_pm;d_m;conjecture;match_rho;match_conjecture\n"
            "3,3;4;2;7;8;9;9;8;false;true\n");
  const auto js = call({"survey", "--max-order", "4", "--h", "2", "--format", "json"});
  ASSERT_EQ(js.code, 0) << js.err;
  const auto doc = json::parse(js.out);
  EXPECT_EQ(doc["v"], 1);
  // orders 2, 3, 4 (twice): 2 + 3 + 4 + 4 rows
  EXPECT_EQ(doc["rows"].size(), 13u);
}

TEST(CliTest, VerifyExitCodes) {
  const auto ok = call({"verify", "--check", "cyclic", "--max-order", "12", "--h", "2,3"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(json::parse(ok.out)["passed"], true);
  const auto skipped = call({"verify", "--check", "no-p2-subgroup", "--max-order", "9", "--h", "2"});
  EXPECT_EQ(skipped.code, 0) << skipped.out;
  const auto refused = call({"verify", "--check", "symmetry", "--max-order", "10", "--budget", "3"});
  EXPECT_EQ(refused.code, 1);
  EXPECT_EQ(json::parse(refused.out)["passed"], false);
}

TEST(CliTest, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "sigma_cli_out.json";
  std::filesystem::remove(path);
  const auto r = call({"compute", "--group", "7", "--m", "3", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  EXPECT_EQ(doc["rho_pm"], 5);
  std::filesystem::remove(path);
}

TEST(CliTest, OutputIndependentOfWorkers) {
  for (const auto& g : {"5,5", "2,12", "3,9"}) {
    const auto one = call({"compute", "--group", g, "--m", "7", "--h", "3", "--workers", "1"});
    const auto four = call({"compute", "--group", g, "--m", "7", "--h", "3", "--workers", "4"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out);
  }
}
