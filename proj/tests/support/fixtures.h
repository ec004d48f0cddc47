#ifndef AEROPLAN_TESTS_FIXTURES_H
#define AEROPLAN_TESTS_FIXTURES_H

#include <cstdint>
#include <vector>

#include "aeroplan/network.h"
#include "aeroplan/scenario.h"

namespace aeroplan::test {

struct PlacedNode {
  int id = 0;
  NodeRole role = NodeRole::kSource;
  Vec3 pos;
};

// Static geometry, LOS forced, no shadowing, one fading shape on every link.
// The single commodity runs from the first source to the first destination.
Scenario FixedScenario(const std::vector<PlacedNode>& nodes, double horizon_s, double size_bits,
                       double kappa = 1e12, uint64_t seed = 1);

// LOS gain of the default channel at distance d, straight from the path-loss
// formula.
double ReferenceLosGain(double distance_m);

// Generated corridor scenario.
Scenario CorridorScenario(uint64_t seed, int num_nodes = 5, double horizon_s = 10.0,
                          double size_bits = 50e6, int num_neighbors = 3);

PlannerOptions Options(BoundMode mode = BoundMode::kApprox2);

// Network indices of the first commodity.
int SourceIndex(const Network& net);
int DestinationIndex(const Network& net);

// Ratio of two leakage levels in dB.
double GapDb(double a, double b);

}  // namespace aeroplan::test

#endif
