#include "cli.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aeroplan/errors.h"
#include "aeroplan/fgamma_table.h"
#include "aeroplan/json_io.h"
#include "aeroplan/multiflow.h"
#include "aeroplan/network.h"
#include "aeroplan/planner.h"
#include "aeroplan/replay.h"
#include "aeroplan/scenario_gen.h"
#include "aeroplan/sweep.h"

namespace aeroplan {
namespace cli {
namespace {

using nlohmann::json;

struct Common {
  std::string scenario;
  std::string out;
  std::string bound = "approx2";
  double dt = 0.05;
  double tol = 1e-4;
  std::string table;
  std::optional<uint64_t> seed;
};

struct Knobs {
  int nodes = 7;
  int neighbors = 3;
  double horizon = 10;
  double size_mbit = 50;
  int commodities = 1;
  bool segments = false;
  double speed_min = 5;
  double speed_max = 20;
};

void AddCommon(CLI::App* app, Common& c, bool needs_scenario) {
  auto* opt = app->add_option("--scenario", c.scenario, "Scenario JSON file");
  if (needs_scenario) opt->required();
  app->add_option("--out", c.out, "Output path (default: stdout)");
  app->add_option("--bound", c.bound, "Capacity model")
      ->check(CLI::IsMember({"lower", "approx1", "approx2", "mc"}));
  app->add_option("--dt", c.dt, "Time grid spacing, s")->check(CLI::PositiveNumber);
  app->add_option("--tol", c.tol, "Relative leakage tolerance")->check(CLI::PositiveNumber);
  app->add_option("--table", c.table, "f(gamma; kappa) table cache file");
  app->add_option("--seed", c.seed, "Seed");
}

void AddKnobs(CLI::App* app, Knobs& k) {
  app->add_option("--nodes", k.nodes, "Network nodes per flow (M)");
  app->add_option("--neighbors", k.neighbors, "Protected neighbors (N)");
  app->add_option("--horizon", k.horizon, "Deadline T, s");
  app->add_option("--size-mbit", k.size_mbit, "Package size S, Mbit");
  app->add_option("--commodities", k.commodities, "Commodities (Z)");
  app->add_flag("--segments", k.segments, "Split one package into Z segments");
  app->add_option("--speed-min", k.speed_min, "Minimum UAV speed, m/s");
  app->add_option("--speed-max", k.speed_max, "Maximum UAV speed, m/s");
}

ScenarioKnobs ToKnobs(const Knobs& k) {
  ScenarioKnobs s;
  s.num_nodes = k.nodes;
  s.num_neighbors = k.neighbors;
  s.horizon_s = k.horizon;
  s.size_bits = k.size_mbit * 1e6;
  s.num_commodities = k.commodities;
  s.segments = k.segments;
  s.speed_min = k.speed_min;
  s.speed_max = k.speed_max;
  return s;
}

struct Context {
  std::unique_ptr<FGammaTable> table;
  PlannerOptions options;
};

Context MakeContext(const Common& c) {
  Context ctx;
  ctx.options.bound = BoundModeFromName(c.bound);
  ctx.options.dt_s = c.dt;
  ctx.options.theta_rel_tol = c.tol;
  if (!c.table.empty()) {
    ctx.table = std::make_unique<FGammaTable>(
        FGammaTable::LoadOrCompute(c.table, FGammaTable::Grid::Default()));
    ctx.options.table = ctx.table.get();
  }
  return ctx;
}

std::unique_ptr<Network> LoadNetwork(const Common& c, const Context& ctx) {
  Scenario s = ScenarioFromJson(ReadJsonFile(c.scenario));
  return std::make_unique<Network>(std::move(s), ctx.options);
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("cannot write '" + path + "'");
}

void EmitJson(const json& j, const std::string& path, std::ostream& out) {
  Emit(j.dump(2) + "\n", path, out);
}

int ErrorExit(std::ostream& err, int code, const std::string& msg) {
  err << json{{"error", msg}, {"exit_code", code}}.dump() << "\n";
  return code;
}

const CommoditySpec& PickCommodity(const std::vector<CommoditySpec>& cs, int index) {
  if (index < 0 || index >= static_cast<int>(cs.size())) {
    throw InputError("commodity index " + std::to_string(index) + " out of range");
  }
  return cs[index];
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interference-aware relay planning for UAV networks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common c_gen, c_plan, c_multi, c_brute, c_replay, c_sweep, c_table;
  Knobs k_gen, k_sweep;

  auto* gen = app.add_subcommand("scenario-gen", "Generate a random scenario");
  AddCommon(gen, c_gen, false);
  AddKnobs(gen, k_gen);

  int plan_commodity = 0;
  std::string dump_graph;
  auto* plan = app.add_subcommand("plan", "Plan a single flow");
  AddCommon(plan, c_plan, true);
  plan->add_option("--commodity", plan_commodity, "Commodity index");
  plan->add_option("--dump-graph", dump_graph, "Write the final space-time graph as JSON");

  int slots = 64;
  auto* multi = app.add_subcommand("plan-multi", "Plan every commodity with shared bandwidth");
  AddCommon(multi, c_multi, true);
  multi->add_option("--slots", slots, "Allocation slots over the horizon")->check(CLI::PositiveNumber);

  int brute_commodity = 0;
  auto* brute = app.add_subcommand("brute", "Exhaustive route search (small instances)");
  AddCommon(brute, c_brute, true);
  brute->add_option("--commodity", brute_commodity, "Commodity index");

  int realizations = 200;
  std::string plan_path;
  bool replay_multi = false;
  auto* replay = app.add_subcommand("replay", "Replay a plan under sampled fading");
  AddCommon(replay, c_replay, true);
  replay->add_option("--plan", plan_path, "Plan JSON (default: plan the first commodity)");
  replay->add_option("--realizations", realizations, "Fading realizations")->check(CLI::PositiveNumber);
  replay->add_flag("--multi", replay_multi, "Replay the multi-commodity plan");

  std::string vary = "T";
  std::string values;
  int seeds = 10;
  std::string methods = "proposed,spacetime,aggregate";
  bool no_runtime = false;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  AddCommon(sweep, c_sweep, false);
  AddKnobs(sweep, k_sweep);
  sweep->add_option("--vary", vary, "Knob to vary")
      ->check(CLI::IsMember({"T", "S", "N", "M", "Z", "segments"}));
  sweep->add_option("--values", values, "Comma-separated knob values (S in Mbit)");
  sweep->add_option("--seeds", seeds, "Seeds per value")->check(CLI::NonNegativeNumber);
  sweep->add_option("--methods", methods, "Comma-separated: proposed, brute, spacetime, aggregate");
  sweep->add_flag("--no-runtime", no_runtime, "Write 0 for runtime_ms");

  auto* table = app.add_subcommand("table-gen", "Compute the f(gamma; kappa) table cache");
  AddCommon(table, c_table, false);

  std::vector<const char*> argv{"aeroplan"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return ErrorExit(err, kExitInvalidInput, e.what());
  }

  try {
    if (gen->parsed()) {
      Scenario s = GenerateScenario(c_gen.seed.value_or(1), ToKnobs(k_gen));
      EmitJson(ScenarioToJson(s), c_gen.out, out);
      return kExitOk;
    }
    if (table->parsed()) {
      std::string path = c_table.out.empty() ? "fgamma_table.csv" : c_table.out;
      FGammaTable::Compute(FGammaTable::Grid::Default()).Save(path);
      EmitJson({{"table", path}, {"grid_hash", FGammaTable::Grid::Default().Hash()}}, "", out);
      return kExitOk;
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.vary = vary;
      for (const std::string& v : SplitList(values)) {
        try {
          spec.values.push_back(std::stod(v));
        } catch (const std::exception&) {
          throw InputError("bad sweep value '" + v + "'");
        }
      }
      spec.n_seeds = seeds;
      spec.first_seed = c_sweep.seed.value_or(1);
      spec.methods = SplitList(methods);
      for (const std::string& m : spec.methods) {
        if (m != "proposed" && m != "brute" && m != "spacetime" && m != "aggregate") {
          throw InputError("unknown method '" + m + "'");
        }
      }
      spec.base = ToKnobs(k_sweep);
      Context ctx = MakeContext(c_sweep);
      spec.options = ctx.options;
      spec.record_runtime = !no_runtime;
      std::string path = c_sweep.out.empty() ? "sweep.csv" : c_sweep.out;
      Emit(SweepCsv(RunSweep(spec)), path, out);
      return kExitOk;
    }

    const Common& c = plan->parsed()    ? c_plan
                      : multi->parsed() ? c_multi
                      : brute->parsed() ? c_brute
                                        : c_replay;
    Context ctx = MakeContext(c);
    std::unique_ptr<Network> net = LoadNetwork(c, ctx);
    std::vector<CommoditySpec> cs = ScenarioCommodities(*net);

    if (plan->parsed() || brute->parsed()) {
      const CommoditySpec& cm = PickCommodity(cs, plan->parsed() ? plan_commodity : brute_commodity);
      Plan p = plan->parsed() ? PlanSingle(*net, cm.src, cm.dst, cm.size_bits)
                              : BruteForce(*net, cm.src, cm.dst, cm.size_bits);
      EmitJson(PlanToJson(*net, p), c.out, out);
      if (!dump_graph.empty()) {
        std::vector<int> nodes = FlowNodes(*net, cm.src, cm.dst);
        SpaceTimeGraph g = BuildGraph(*net, nodes, p.boundaries, cm.size_bits);
        EmitJson(GraphToJson(*net, g), dump_graph, out);
      }
      if (!p.feasible) return ErrorExit(err, kExitInfeasible, "infeasible task: no route meets the deadline");
      return kExitOk;
    }
    if (multi->parsed()) {
      MultiOptions mo;
      mo.n_slots = slots;
      MultiPlan mp = PlanMulti(*net, cs, mo);
      EmitJson(MultiPlanToJson(*net, mp), c.out, out);
      if (!mp.feasible) return ErrorExit(err, kExitInfeasible, "infeasible task: " + mp.diagnostics);
      return kExitOk;
    }
    // replay
    uint64_t seed = c.seed.value_or(net->scenario().seed);
    ReplayReport rep;
    if (replay_multi) {
      MultiPlan mp = PlanMulti(*net, cs);
      if (!mp.feasible) return ErrorExit(err, kExitInfeasible, "infeasible task: " + mp.diagnostics);
      rep = ReplayMulti(*net, mp, cs, realizations, seed);
    } else {
      const CommoditySpec& cm = PickCommodity(cs, 0);
      Plan p = plan_path.empty() ? PlanSingle(*net, cm.src, cm.dst, cm.size_bits)
                                 : PlanFromJson(*net, ReadJsonFile(plan_path));
      if (!p.feasible || !std::isfinite(p.theta)) {
        return ErrorExit(err, kExitInfeasible, "infeasible task: plan has no finite leakage level");
      }
      rep = Replay(*net, p, cm.size_bits, realizations, seed);
    }
    EmitJson(ReplayToJson(rep), c.out, out);
    return kExitOk;
  } catch (const InputError& e) {
    return ErrorExit(err, kExitInvalidInput, e.what());
  }
}

}  // namespace cli
}  // namespace aeroplan
