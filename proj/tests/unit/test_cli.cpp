#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "helpers.hpp"
#include "rsdl/parse.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult rsdl_run(std::vector<std::string> args) {
  args.insert(args.begin(), "rsdl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rsdl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Cli, CountMonomial) {
  const CliResult r = rsdl_run({"--field", "q=5", "count", "--f", "x^3", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "q,k,m,r,f,count");
  std::vector<std::string> counts;
  for (std::size_t i = 1; i < rows.size(); ++i) counts.push_back(rows[i].substr(rows[i].rfind(',') + 1));
  EXPECT_EQ(counts, (std::vector<std::string>{"8", "11", "4", "2"}));
}

TEST(Cli, CountWithFormula) {
  const CliResult r = rsdl_run({"--field", "q=5", "--format", "json", "count", "--f", "x^2", "--k", "2", "--r", "2",
                          "--check-formula"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["count"], 10);
  EXPECT_EQ(j[0]["holds"], true);
}

TEST(Cli, DistributionAndCensus) {
  const CliResult d = rsdl_run({"--field", "q=5", "--format", "json", "distribution", "--k", "2", "--poly", "x^4"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("Ordinary"), std::string::npos);
  const CliResult c = rsdl_run({"--field", "q=3", "--format", "json", "census", "--k", "1"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json::parse(c.out).size(), 6u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(rsdl_run({"--field", "q=6", "count", "--f", "x^3", "--k", "2"}).code, 2);
  EXPECT_EQ(rsdl_run({"count", "--f", "x^^3", "--k", "2"}).code, 2);
  EXPECT_EQ(rsdl_run({"frobnicate"}).code, 2);
  EXPECT_EQ(rsdl_run({"--budget", "1000", "--field", "q=9", "count", "--f", "x^6", "--k", "5"}).code, 3);
  EXPECT_EQ(rsdl_run({"regime", "--c", "0.3", "--delta", "0.3", "--lambda", "0.1", "--primes", "101"}).code, 2);
  EXPECT_EQ(rsdl_run({"--help"}).code, 0);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("RSDL_BUDGET", "1000", 1);
  const int code = rsdl_run({"--field", "q=9", "count", "--f", "x^6", "--k", "5"}).code;
  ::setenv("RSDL_BUDGET", "banana", 1);
  const int bad = rsdl_run({"--field", "q=5", "count", "--f", "x^3", "--k", "2"}).code;
  ::unsetenv("RSDL_BUDGET");
  EXPECT_EQ(code, 3);
  EXPECT_EQ(bad, 2);
}

TEST(Cli, VerifySuitesPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "7", "verify", "sieve", "--k", "5", "--trials", "50"},
           {"verify", "formulas", "--q", "5", "--kmax", "3"},
           {"verify", "weil", "--q", "5", "--m", "2"},
           {"verify", "rs", "--q", "3,4"},
       }) {
    const CliResult r = rsdl_run(args);
    EXPECT_EQ(r.code, 0) << args[args.size() > 3 ? 3 : 1] << r.err;
    for (const auto& l : lines(r.out)) EXPECT_EQ(json::parse(l)["passed"], true) << l;
  }
}

TEST(Cli, RegimeSinglePrime) {
  const CliResult r = rsdl_run({"regime", "--c", "0.3", "--delta", "0.2", "--lambda", "0.1", "--primes", "101"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 2u);
}

TEST(Cli, OutputIndependentOfWorkers) {
  const std::vector<std::string> base{"--field", "q=7", "count", "--f", "x^5+x^4", "--k", "3"};
  auto with = [&](const char* w) {
    auto a = base;
    a.insert(a.begin(), {"--workers", w});
    return rsdl_run(a);
  };
  const CliResult one = with("1"), four = with("4");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  const CliResult s1 = rsdl_run({"--workers", "1", "--seed", "3", "bounds", "sweep", "--count", "20"});
  const CliResult s3 = rsdl_run({"--workers", "3", "--seed", "3", "bounds", "sweep", "--count", "20"});
  ASSERT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s3.out);
}

TEST(Cli, OutFileReceivesReport) {
  const auto path = std::filesystem::temp_directory_path() / "rsdl_cli_out.csv";
  const CliResult r = rsdl_run({"--out", path.string(), "--field", "q=5", "count", "--f", "x^3", "--k", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(lines(text.str()).size(), 5u);
  std::filesystem::remove(path);
}

// Every stored fixture is recomputed by the test oracles.
TEST(Fixtures, RecordsMatchOracles) {
  std::ifstream in(RSDL_FIXTURE_PATH);
  ASSERT_TRUE(in) << RSDL_FIXTURE_PATH;
  const json records = json::parse(in);
  ASSERT_GT(records.size(), 50u);
  for (const auto& rec : records) {
    const rsdl::Field F = rsdl::parse_field(rec["field"].get<std::string>());
    const auto G = testing_helpers::gf_of(F);
    const auto f = testing_helpers::coeffs_of(rsdl::parse_poly(rec["f"].get<std::string>(), F));
    const std::size_t k = rec["k"], r = rec["r"];
    const long m = rec["m"];
    const std::string kind = rec["oracle"];
    const std::uint64_t value = rec["value"];
    std::uint64_t want = 0;
    if (kind == "count_N")
      want = oracle::count_N(G, f, k, oracle::all_elements(G)).at(r);
    else if (kind == "count_M")
      want = oracle::count_M(G, f, k, r);
    else if (kind == "count_N2" || kind == "count_N2_star")
      want = oracle::count_N2(G, f, r, k + static_cast<std::size_t>(m), static_cast<std::size_t>(m),
                              kind == "count_N2_star");
    else
      FAIL() << kind;
    EXPECT_EQ(value, want) << rec.dump();
  }
}

}  // namespace
