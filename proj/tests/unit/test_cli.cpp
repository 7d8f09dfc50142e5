#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "trinomial_cli.hpp"

namespace cli = trinomial::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "trinomial");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TRINOMIAL_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, TransformBfile) {
  const Result r = invoke({"transform", "--source", "tribonacci", "--count", "9", "--format", "bfile"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(data("tribonacci_transform.b")));
}

TEST(Cli, TransformFromSpecFileMatchesCatalog) {
  const Result a = invoke({"transform", "--spec-file", data("tribonacci.json"), "--count", "12", "--diag", "2"});
  const Result b = invoke({"transform", "--source", "tribonacci", "--count", "12", "--diag", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("149"), std::string::npos);
}

TEST(Cli, TransformCsv) {
  const Result r = invoke({"transform", "--source", "fibonacci", "--count", "3", "--diag", "1", "--format", "csv"});
  EXPECT_EQ(r.out, "n,value\n0,1\n1,4\n2,20\n");
}

TEST(Cli, TriangleOnes) {
  const Result r = invoke({"triangle", "--source", "ones", "--K", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(data("ones_triangle_K4.txt")));
}

TEST(Cli, TriangleWithSums) {
  const Result r = invoke({"triangle", "--source", "fibonacci", "--K", "9", "--sums"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1914660"), std::string::npos);
  EXPECT_NE(r.out.find("s̄"), std::string::npos);
  const Result csv = invoke({"triangle", "--source", "ones", "--K", "2", "--sums", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,0,1,2\n0,1,1,1\n1,,3,3\n2,,,9\ns,1,4,13\nsbar,1,-2,7\n");
}

TEST(Cli, NoTrailingWhitespace) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"triangle", "--source", "naturals", "--K", "6", "--sums"},
           {"sums", "--source", "tribonacci"},
           {"export", "--source", "ones", "--sequence", "sbar"}}) {
    const Result r = invoke(args);
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
      ASSERT_FALSE(line.empty());
      EXPECT_NE(line.back(), ' ') << line;
    }
    EXPECT_EQ(r.out.back(), '\n');
  }
}

TEST(Cli, Coeffs) {
  const Result r = invoke({"coeffs", "--source", "fibonacci"});
  EXPECT_EQ(r.code, 0);
  for (const char* line : {"𝒜=9\n", "ℬ=-22\n", "𝒞=12\n", "𝒫=-5\n", "𝒬=2\n", "sum6=11, -40, 55, -15, -22, 12\n",
                           "alt6=-7, -4, 31, 15, -22, -12\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
  const Result csv = invoke({"coeffs", "--source", "tribonacci", "--format", "csv"});
  EXPECT_NE(csv.out.find("A,7\nB,-5\nC,1\nP,3\nQ,1\n"), std::string::npos);
}

TEST(Cli, Sums) {
  const Result r = invoke({"sums", "--source", "naturals", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n9,265716,"), std::string::npos);
}

TEST(Cli, Charpoly) {
  const Result r = invoke({"charpoly", "--source", "fibonacci"});
  EXPECT_EQ(r.out, "base:      t^3 - 2t^2 + 1\ntransform: s^3 - 9s^2 + 22s - 12\nrecurrence: 9, -22, 12\n");
}

TEST(Cli, VerifySymbolic) {
  const Result r = invoke({"verify", "--suite", "symbolic"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("HOLDS"), std::string::npos);
  EXPECT_NE(r.out.find("b(2) = (αγ+2γ+1)x + (αβ+2β+γ+2)y + (α²+2α+β+3)z"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}

TEST(Cli, VerifyOtherSuites) {
  for (const char* suite : {"tables", "oeis", "fuzz"}) {
    const Result r = invoke({"verify", "--suite", suite});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
  }
  const Result explore = invoke({"verify", "--suite", "explore"});
  EXPECT_EQ(explore.code, 0);
  EXPECT_NE(explore.out.find("agree"), std::string::npos);
}

TEST(Cli, ExportVariants) {
  const Result base = invoke({"export", "--source", "tribonacci", "--sequence", "base", "--count", "5"});
  EXPECT_EQ(base.out, "0 0\n1 0\n2 1\n3 1\n4 2\n");
  const Result s = invoke({"export", "--source", "ones", "--sequence", "s", "--count", "4"});
  EXPECT_EQ(s.out, "0 1\n1 4\n2 13\n3 40\n");

  const std::string path = testing::TempDir() + "trinomial_export.b";
  const Result file = invoke({"export", "--source", "tribonacci", "--count", "9", "--output", path});
  EXPECT_EQ(file.code, 0);
  EXPECT_EQ(file.out, "");
  EXPECT_EQ(slurp(path), slurp(data("tribonacci_transform.b")));
  std::remove(path.c_str());
}

TEST(Cli, BigIntegersFromSpecFile) {
  const Result r = invoke({"export", "--spec-file", data("big_initials.json"), "--count", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0\n1 200000000000000000000\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"triangle", "--source", "tribonacci", "--K", "12", "--sums"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, DistinctErrorCodes) {
  const Result unknown = invoke({"transform", "--source", "lucas"});
  EXPECT_EQ(unknown.code, cli::kUnknownSource);
  EXPECT_NE(unknown.err.find("lucas"), std::string::npos);

  const Result bad_spec = invoke({"transform", "--spec-file", data("gamma_zero.json")});
  EXPECT_EQ(bad_spec.code, cli::kBadSpecFile);
  const Result missing = invoke({"transform", "--spec-file", data("missing.json")});
  EXPECT_EQ(missing.code, cli::kBadSpecFile);

  const Result no_source = invoke({"transform"});
  EXPECT_EQ(no_source.code, cli::kUsage);
  const Result both = invoke({"transform", "--source", "ones", "--spec-file", data("tribonacci.json")});
  EXPECT_EQ(both.code, cli::kUsage);
  const Result too_big = invoke({"triangle", "--source", "ones", "--K", "10001"});
  EXPECT_EQ(too_big.code, cli::kUsage);
  const Result bad_format = invoke({"sums", "--source", "ones", "--format", "bfile"});
  EXPECT_EQ(bad_format.code, cli::kUsage);
  const Result no_command = invoke({});
  EXPECT_EQ(no_command.code, cli::kUsage);
}

TEST(Cli, RunValidatesConfig) {
  cli::CliConfig cfg;
  cfg.subcommand = "verify";
  cfg.suite = "symbolic";
  std::ostringstream out, err;
  EXPECT_EQ(cli::run(cfg, out, err), cli::kOk);
  cfg.count = 0;
  EXPECT_EQ(cli::run(cfg, out, err), cli::kUsage);
}
