#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypfib/cli.hpp"

namespace {

int RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "hypfib");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return hypfib::Run(static_cast<int>(argv.size()), argv.data());
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hypfib_cli_" + name)).string();
}

std::string Slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CountJson) {
  const std::string out = TempPath("count.json");
  ASSERT_EQ(RunArgs({"count", "--B", "1", "--out", out}), 0);
  const auto j = nlohmann::json::parse(Slurp(out));
  EXPECT_EQ(j["count_N"], 23);
  EXPECT_EQ(j["omega0"], 5);
  EXPECT_EQ(j["omega1"], 9);
}

TEST(Cli, CountCsv) {
  const std::string out = TempPath("count.csv");
  ASSERT_EQ(RunArgs({"count", "--B", "1", "--format", "csv", "--out", out}), 0);
  EXPECT_EQ(Slurp(out), "B,count_N,omega0,omega1,omega_total\n1,23,5,9,27\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(RunArgs({}), 2);
  EXPECT_EQ(RunArgs({"count", "--B", "nope"}), 2);
  EXPECT_EQ(RunArgs({"charsum", "--p", "9"}), 2);
  EXPECT_EQ(RunArgs({"tau-profile", "--p", "5", "--lambda", "0"}), 2);
  EXPECT_EQ(RunArgs({"count", "--B", "100000"}), 3);
  EXPECT_EQ(RunArgs({"count", "--surface", TempPath("missing.json"), "--B", "1"}), 2);
}

TEST(Cli, SurfaceFile) {
  const std::string path = TempPath("surface.json");
  {
    std::ofstream f(path);
    f << R"({"n": 3, "f": ["0","0","0","0","0"], "g": ["1","0","0","0","0","0","1"]})";
  }
  const std::string out = TempPath("count_file.json");
  ASSERT_EQ(RunArgs({"count", "--surface", path, "--B", "1", "--out", out}), 0);
  EXPECT_EQ(nlohmann::json::parse(Slurp(out))["count_N"], 23);
}

TEST(Cli, SubcommandsRun) {
  const std::vector<std::vector<std::string>> cmds{
      {"good-primes", "--p", "30"},
      {"charsum", "--p", "15", "--c", "2", "--u", "1,-1", "--B", "2"},
      {"wp-scan", "--p", "5", "--samples", "5"},
      {"vdc-audit", "--p", "3", "--pp", "5", "--q", "7", "--qq", "11", "--B", "80"},
      {"tau-profile", "--p", "5", "--lambda", "2", "--h", "1,3", "--mu", "4,0", "--locus"},
      {"moments", "--p", "5", "--lambda", "1", "--h", "1,0", "--mu", "0,1"},
      {"sieve-audit", "--B", "20", "--format", "csv"},
      {"sing-locus", "--p", "5", "--tau", "2"},
      {"polf-check", "--p", "5", "--r", "2", "--h", "1,2"},
  };
  for (const auto& cmd : cmds) {
    const std::string out = TempPath("sub_" + cmd[0]);
    auto args = cmd;
    args.push_back("--out");
    args.push_back(out);
    EXPECT_EQ(RunArgs(args), 0) << cmd[0];
    EXPECT_FALSE(Slurp(out).empty()) << cmd[0];
  }
}

TEST(Cli, DeterministicScan) {
  const std::string a = TempPath("wp_a.json"), b = TempPath("wp_b.json");
  ASSERT_EQ(RunArgs({"wp-scan", "--p", "11", "--samples", "8", "--seed", "4", "--out", a}), 0);
  ASSERT_EQ(RunArgs({"wp-scan", "--p", "11", "--samples", "8", "--seed", "4", "--threads", "3", "--out", b}), 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
}
