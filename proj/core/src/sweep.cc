#include "aeroplan/sweep.h"

#include <chrono>
#include <memory>
#include <cmath>
#include <sstream>

#include "aeroplan/errors.h"
#include "aeroplan/multiflow.h"
#include "aeroplan/parallel.h"
#include "aeroplan/planner.h"
#include "aeroplan/units.h"

namespace aeroplan {
namespace {

struct Outcome {
  double theta = kInf;
  int iterations = 0;
};

Outcome RunMethod(const Network& net, const std::string& method) {
  std::vector<CommoditySpec> cs = ScenarioCommodities(net);
  if (cs.size() == 1) {
    const CommoditySpec& c = cs[0];
    Plan p;
    if (method == "proposed") {
      p = PlanSingle(net, c.src, c.dst, c.size_bits);
    } else if (method == "brute") {
      p = BruteForce(net, c.src, c.dst, c.size_bits);
    } else if (method == "spacetime") {
      p = BaselineSpacetime(net, c.src, c.dst, c.size_bits);
    } else if (method == "aggregate") {
      p = BaselineAggregate(net, c.src, c.dst, c.size_bits);
    } else {
      throw InputError("unknown method '" + method + "'");
    }
    return {p.feasible ? p.theta : kInf, p.iterations};
  }
  MultiPlan mp;
  if (method == "proposed") {
    mp = PlanMulti(net, cs);
  } else if (method == "spacetime" || method == "aggregate") {
    mp = PlanMultiEqualShare(net, cs, method);
  } else {
    throw InputError("method '" + method + "' does not support multiple commodities");
  }
  return {mp.feasible ? mp.theta : kInf, mp.iterations};
}

}  // namespace

ScenarioKnobs ApplyKnob(const ScenarioKnobs& base, const std::string& knob, double value) {
  ScenarioKnobs k = base;
  if (knob == "T") {
    k.horizon_s = value;
  } else if (knob == "S") {
    k.size_bits = value * 1e6;
  } else if (knob == "N") {
    k.num_neighbors = static_cast<int>(std::lround(value));
  } else if (knob == "M") {
    k.num_nodes = static_cast<int>(std::lround(value));
  } else if (knob == "Z") {
    k.num_commodities = static_cast<int>(std::lround(value));
    k.segments = false;
  } else if (knob == "segments") {
    k.num_commodities = static_cast<int>(std::lround(value));
    k.segments = true;
  } else {
    throw InputError("unknown sweep knob '" + knob + "'");
  }
  return k;
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec) {
  size_t n_cells = spec.values.size() * static_cast<size_t>(std::max(0, spec.n_seeds));
  size_t n_methods = spec.methods.size();
  std::vector<SweepRow> rows(n_cells * n_methods);
  ParallelFor(n_cells, [&](size_t cell) {
    size_t vi = cell / spec.n_seeds;
    uint64_t seed = spec.first_seed + cell % spec.n_seeds;
    double value = spec.values[vi];
    std::unique_ptr<Network> net;
    std::string setup_error;
    try {
      ScenarioKnobs k = ApplyKnob(spec.base, spec.vary, value);
      net = std::make_unique<Network>(GenerateScenario(seed, k), spec.options);
    } catch (const InputError& e) {
      setup_error = e.what();
    }
    for (size_t mi = 0; mi < n_methods; ++mi) {
      SweepRow& row = rows[cell * n_methods + mi];
      row.method = spec.methods[mi];
      row.seed = seed;
      row.knob_name = spec.vary;
      row.knob_value = value;
      Outcome o;
      auto start = std::chrono::steady_clock::now();
      if (net) {
        try {
          o = RunMethod(*net, row.method);
        } catch (const InputError&) {
          o = Outcome{};
        }
      }
      auto stop = std::chrono::steady_clock::now();
      row.theta_dbm = WattsToDbm(o.theta);
      row.feasible = std::isfinite(o.theta);
      row.iterations = o.iterations;
      row.runtime_ms = spec.record_runtime
                           ? std::chrono::duration<double, std::milli>(stop - start).count()
                           : 0.0;
    }
  });
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "method,seed,knob_name,knob_value,theta_dbm,feasible,runtime_ms,iterations\n";
  out.precision(10);
  for (const SweepRow& r : rows) {
    out << r.method << "," << r.seed << "," << r.knob_name << "," << r.knob_value << ",";
    if (std::isfinite(r.theta_dbm)) {
      out << r.theta_dbm;
    } else {
      out << "inf";
    }
    out << "," << (r.feasible ? 1 : 0) << ",";
    out.precision(6);
    out << r.runtime_ms;
    out.precision(10);
    out << "," << r.iterations << "\n";
  }
  return out.str();
}

}  // namespace aeroplan
