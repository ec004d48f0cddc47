#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.h"

namespace aeroplan {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::Run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string TmpPath(const std::string& name) {
  fs::create_directories(AEROPLAN_TEST_TMPDIR);
  return (fs::path(AEROPLAN_TEST_TMPDIR) / name).string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Writes a generated scenario and returns its path.
std::string Generate(const std::string& name, std::vector<std::string> knobs) {
  std::string path = TmpPath(name);
  std::vector<std::string> args{"scenario-gen", "--out", path};
  args.insert(args.end(), knobs.begin(), knobs.end());
  Result r = RunCli(args);
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  return path;
}

TEST(Cli, PlanOnGeneratedScenario) {
  std::string s = Generate("plan.json", {"--seed", "3", "--nodes", "5"});
  Result r = RunCli({"plan", "--scenario", s});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_EQ(j["route"].size(), 5u);
}

TEST(Cli, ScenarioGenOutputFeedsEverySubcommand) {
  std::string s = Generate("roundtrip.json",
                           {"--seed", "4", "--nodes", "4", "--commodities", "2", "--size-mbit", "20"});
  std::string plan = TmpPath("roundtrip_plan.json");
  EXPECT_EQ(RunCli({"plan", "--scenario", s, "--out", plan}).code, cli::kExitOk);
  EXPECT_EQ(RunCli({"plan", "--scenario", s, "--commodity", "1"}).code, cli::kExitOk);
  EXPECT_EQ(RunCli({"brute", "--scenario", s}).code, cli::kExitOk);
  EXPECT_EQ(RunCli({"plan-multi", "--scenario", s, "--slots", "8"}).code, cli::kExitOk);
  Result rep = RunCli({"replay", "--scenario", s, "--plan", plan, "--realizations", "5"});
  ASSERT_EQ(rep.code, cli::kExitOk) << rep.err;
  EXPECT_TRUE(json::parse(rep.out).contains("median_ratio"));
}

TEST(Cli, IdenticalArgsGiveIdenticalBytes) {
  std::string a = Generate("det_a.json", {"--seed", "9"});
  std::string b = Generate("det_b.json", {"--seed", "9"});
  EXPECT_EQ(ReadFile(a), ReadFile(b));
  Result p1 = RunCli({"plan", "--scenario", a});
  Result p2 = RunCli({"plan", "--scenario", a});
  EXPECT_EQ(p1.out, p2.out);
  Result r1 = RunCli({"replay", "--scenario", a, "--realizations", "4"});
  Result r2 = RunCli({"replay", "--scenario", a, "--realizations", "4"});
  EXPECT_EQ(r1.out, r2.out);
}

TEST(Cli, BruteRefusesLargeInstances) {
  std::string s = Generate("m12.json", {"--seed", "1", "--nodes", "12"});
  Result r = RunCli({"brute", "--scenario", s});
  EXPECT_EQ(r.code, cli::kExitInvalidInput);
  EXPECT_NE(r.err.find("oracle scale exceeded"), std::string::npos);
  json e = json::parse(r.err);
  EXPECT_EQ(e["exit_code"], 2);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(RunCli({"plan", "--scenario", "/nonexistent.json"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({"plan", "--bogus"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({"frobnicate"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({}).code, cli::kExitInvalidInput);
  std::string s = Generate("bound.json", {"--seed", "1"});
  EXPECT_EQ(RunCli({"plan", "--scenario", s, "--bound", "upper"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({"plan", "--scenario", s, "--commodity", "5"}).code, cli::kExitInvalidInput);
  std::string broken = TmpPath("broken.json");
  std::ofstream(broken) << "{\"horizon_s\": 10, \"nodes\": 3}";
  Result r = RunCli({"plan", "--scenario", broken});
  EXPECT_EQ(r.code, cli::kExitInvalidInput);
  EXPECT_TRUE(json::parse(r.err).contains("error"));
}

TEST(Cli, InfeasibleTaskExitsThree) {
  std::string s = Generate("infeasible.json",
                           {"--seed", "2", "--nodes", "3", "--horizon", "0.05", "--size-mbit", "1e6"});
  Result r = RunCli({"plan", "--scenario", s});
  EXPECT_EQ(r.code, cli::kExitInfeasible);
  json e = json::parse(r.err);
  EXPECT_EQ(e["exit_code"], 3);
  EXPECT_TRUE(json::parse(r.out)["theta_w"].is_null());
}

TEST(Cli, SweepWritesOneRowPerCell) {
  std::string csv = TmpPath("sweep.csv");
  Result r = RunCli({"sweep", "--vary", "T", "--values", "1,5,10", "--seeds", "10", "--methods",
                     "proposed,spacetime,aggregate", "--nodes", "4", "--out", csv});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::string text = ReadFile(csv);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 91);
  EXPECT_EQ(text.rfind("method,seed,knob_name", 0), 0u);
}

TEST(Cli, SweepRejectsUnknownMethodAndKnob) {
  EXPECT_EQ(RunCli({"sweep", "--values", "1", "--methods", "magic"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({"sweep", "--vary", "Q", "--values", "1"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(RunCli({"sweep", "--values", "1,x"}).code, cli::kExitInvalidInput);
}

TEST(Cli, TableGenWritesCache) {
  std::string path = TmpPath("table.csv");
  Result r = RunCli({"table-gen", "--out", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(path));
  std::string s = Generate("with_table.json", {"--seed", "5"});
  EXPECT_EQ(RunCli({"plan", "--scenario", s, "--table", path}).code, cli::kExitOk);
}

}  // namespace
}  // namespace aeroplan
