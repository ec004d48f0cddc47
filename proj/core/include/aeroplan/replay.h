#ifndef AEROPLAN_REPLAY_H
#define AEROPLAN_REPLAY_H

#include <cstdint>
#include <vector>

#include "aeroplan/multiflow.h"
#include "aeroplan/network.h"
#include "aeroplan/planner.h"

namespace aeroplan {

struct FlowReplay {
  double size_bits = 0;
  std::vector<std::vector<double>> hop_ratio;  // [realization][transmission]
  std::vector<double> end_to_end_ratio;        // worst hop per realization
  double median_ratio = 0;
};

struct ReplayReport {
  double theta_w = 0;
  int n_realizations = 0;
  std::vector<FlowReplay> flows;
  std::vector<double> max_interference_w;  // per neighbor, over all samples
  // Largest |max_j I_j - theta| / theta over every transmitting sample.
  double max_policy_rel_error = 0;
  long samples = 0;
  double median_ratio = 0;  // over every flow and realization
};

// Replays a plan under sampled fading: each grid cell draws independent
// Gamma fading for the transmit link and every neighbor link, transmits at
// the leakage-pinning power, and accumulates delivered bits per hop.
ReplayReport Replay(const Network& net, const Plan& plan, double size_bits, int n_realizations,
                    uint64_t seed);

ReplayReport ReplayMulti(const Network& net, const MultiPlan& plan,
                         const std::vector<CommoditySpec>& commodities, int n_realizations,
                         uint64_t seed);

double Median(std::vector<double> v);

}  // namespace aeroplan

#endif
