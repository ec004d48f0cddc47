#ifndef AEROPLAN_SWEEP_H
#define AEROPLAN_SWEEP_H

#include <cstdint>
#include <string>
#include <vector>

#include "aeroplan/network.h"
#include "aeroplan/scenario_gen.h"

namespace aeroplan {

// Knobs a sweep may vary: T (s), S (Mbit), N, Z (independent pairs),
// segments (one pair split into Z parts), M.
struct SweepSpec {
  std::string vary = "T";
  std::vector<double> values;
  int n_seeds = 1;
  uint64_t first_seed = 1;
  std::vector<std::string> methods{"proposed"};
  ScenarioKnobs base;
  PlannerOptions options;
  bool record_runtime = true;
};

struct SweepRow {
  std::string method;
  uint64_t seed = 0;
  std::string knob_name;
  double knob_value = 0;
  double theta_dbm = 0;
  bool feasible = false;
  double runtime_ms = 0;
  int iterations = 0;
};

// Knobs for one sweep cell. Throws InputError for an unknown knob.
ScenarioKnobs ApplyKnob(const ScenarioKnobs& base, const std::string& knob, double value);

// Rows ordered by value, then seed, then method (in the given order),
// independent of the worker count.
std::vector<SweepRow> RunSweep(const SweepSpec& spec);

std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace aeroplan

#endif
