#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "aeroplan/errors.h"
#include "aeroplan/sweep.h"

namespace aeroplan {
namespace {

int CountLines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

SweepSpec SmallSpec() {
  SweepSpec spec;
  spec.vary = "T";
  spec.values = {5, 10};
  spec.n_seeds = 2;
  spec.methods = {"proposed", "spacetime", "aggregate"};
  spec.base.num_nodes = 4;
  spec.base.size_bits = 20e6;
  spec.record_runtime = false;
  return spec;
}

TEST(RunSweep, EmptyValuesGiveHeaderOnly) {
  SweepSpec spec = SmallSpec();
  spec.values.clear();
  std::string csv = SweepCsv(RunSweep(spec));
  EXPECT_EQ(csv, "method,seed,knob_name,knob_value,theta_dbm,feasible,runtime_ms,iterations\n");
}

TEST(RunSweep, RowOrderAndCount) {
  SweepSpec spec = SmallSpec();
  std::vector<SweepRow> rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(CountLines(SweepCsv(rows)), 13);
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].method, spec.methods[i % 3]);
    EXPECT_EQ(rows[i].seed, 1 + (i / 3) % 2);
    EXPECT_EQ(rows[i].knob_value, spec.values[i / 6]);
    EXPECT_EQ(rows[i].runtime_ms, 0.0);
  }
}

TEST(RunSweep, ProposedNeverLosesToBaselines) {
  std::vector<SweepRow> rows = RunSweep(SmallSpec());
  for (size_t i = 0; i < rows.size(); i += 3) {
    ASSERT_TRUE(rows[i].feasible);
    EXPECT_LE(rows[i].theta_dbm, rows[i + 1].theta_dbm + 0.01);
    EXPECT_LE(rows[i].theta_dbm, rows[i + 2].theta_dbm + 0.01);
  }
}

TEST(RunSweep, BruteForceLowerBoundsProposed) {
  SweepSpec spec = SmallSpec();
  spec.methods = {"proposed", "brute"};
  std::vector<SweepRow> rows = RunSweep(spec);
  for (size_t i = 0; i < rows.size(); i += 2) {
    EXPECT_LE(rows[i + 1].theta_dbm, rows[i].theta_dbm + 0.01);
  }
}

TEST(RunSweep, OutputIndependentOfThreadCount) {
  SweepSpec spec = SmallSpec();
  setenv("AEROPLAN_THREADS", "1", 1);
  std::string one = SweepCsv(RunSweep(spec));
  setenv("AEROPLAN_THREADS", "4", 1);
  std::string four = SweepCsv(RunSweep(spec));
  unsetenv("AEROPLAN_THREADS");
  EXPECT_EQ(one, four);
}

TEST(RunSweep, LongerDeadlinesLowerLeakage) {
  SweepSpec spec = SmallSpec();
  spec.values = {2, 20};
  spec.methods = {"proposed"};
  std::vector<SweepRow> rows = RunSweep(spec);
  for (int s = 0; s < 2; ++s) EXPECT_LT(rows[2 + s].theta_dbm, rows[s].theta_dbm);
}

TEST(RunSweep, MoreCommoditiesRaiseLeakage) {
  SweepSpec spec = SmallSpec();
  spec.vary = "Z";
  spec.values = {1, 3};
  spec.methods = {"proposed"};
  std::vector<SweepRow> rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 4u);
  for (int s = 0; s < 2; ++s) EXPECT_GT(rows[2 + s].theta_dbm, rows[s].theta_dbm);
}

TEST(RunSweep, OversizedBruteRowsAreInfeasible) {
  SweepSpec spec = SmallSpec();
  spec.vary = "M";
  spec.values = {12};
  spec.n_seeds = 1;
  spec.methods = {"brute"};
  std::vector<SweepRow> rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].feasible);
  EXPECT_NE(SweepCsv(rows).find(",inf,0,"), std::string::npos);
}

TEST(ApplyKnob, MapsEveryKnob) {
  ScenarioKnobs base;
  EXPECT_EQ(ApplyKnob(base, "T", 3).horizon_s, 3);
  EXPECT_EQ(ApplyKnob(base, "S", 5).size_bits, 5e6);
  EXPECT_EQ(ApplyKnob(base, "N", 2).num_neighbors, 2);
  EXPECT_EQ(ApplyKnob(base, "M", 6).num_nodes, 6);
  EXPECT_EQ(ApplyKnob(base, "Z", 4).num_commodities, 4);
  EXPECT_FALSE(ApplyKnob(base, "Z", 4).segments);
  EXPECT_TRUE(ApplyKnob(base, "segments", 4).segments);
  EXPECT_THROW(ApplyKnob(base, "Q", 1), InputError);
}

}  // namespace
}  // namespace aeroplan
