#include "fixtures.h"

#include <cmath>

#include "aeroplan/scenario_gen.h"

namespace aeroplan::test {

Scenario FixedScenario(const std::vector<PlacedNode>& nodes, double horizon_s, double size_bits,
                       double kappa, uint64_t seed) {
  Scenario s;
  s.seed = seed;
  s.horizon_s = horizon_s;
  s.channel.los_mode = LosMode::kForceLos;
  s.channel.shadow.variance_db = 0;
  s.channel.kappa_air_ground = {kappa, kappa};
  s.channel.kappa_air_air = {kappa, kappa};
  int src = -1;
  int dst = -1;
  for (const PlacedNode& p : nodes) {
    s.nodes.push_back({p.id, p.role, Trajectory::Static(p.pos)});
    if (p.role == NodeRole::kSource && src < 0) src = p.id;
    if (p.role == NodeRole::kDestination && dst < 0) dst = p.id;
  }
  s.commodities.push_back({src, dst, size_bits});
  return s;
}

double ReferenceLosGain(double distance_m) {
  double pl = 22.0 + 28.0 * std::log10(distance_m) + 20.0 * std::log10(3e9);
  return std::pow(10.0, -pl / 10.0);
}

Scenario CorridorScenario(uint64_t seed, int num_nodes, double horizon_s, double size_bits,
                          int num_neighbors) {
  ScenarioKnobs k;
  k.num_nodes = num_nodes;
  k.horizon_s = horizon_s;
  k.size_bits = size_bits;
  k.num_neighbors = num_neighbors;
  return GenerateScenario(seed, k);
}

PlannerOptions Options(BoundMode mode) {
  PlannerOptions o;
  o.bound = mode;
  return o;
}

int SourceIndex(const Network& net) { return net.IndexOfId(net.scenario().commodities[0].src); }

int DestinationIndex(const Network& net) {
  return net.IndexOfId(net.scenario().commodities[0].dst);
}

double GapDb(double a, double b) { return 10.0 * std::log10(a / b); }

}  // namespace aeroplan::test
