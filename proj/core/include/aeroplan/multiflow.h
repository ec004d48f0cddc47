#ifndef AEROPLAN_MULTIFLOW_H
#define AEROPLAN_MULTIFLOW_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aeroplan/network.h"
#include "aeroplan/planner.h"

namespace aeroplan {

struct CommoditySpec {
  int id = 0;
  int src = 0;  // network index
  int dst = 0;  // network index
  double size_bits = 0;
};

// Commodities of the scenario's task, in order, with network indices.
std::vector<CommoditySpec> ScenarioCommodities(const Network& net);

// Piecewise-constant band shares on a slot grid over [0, T].
struct ResourceAllocation {
  int n_slots = 0;
  double slot_s = 0;
  std::vector<std::vector<double>> shares;  // [commodity][slot]

  static ResourceAllocation Uniform(int n_commodities, int n_slots, double horizon, double share);

  double SlotSum(int slot) const;
  // Per-cell share of commodity z on the network's fine grid (0 past T).
  std::vector<double> CellProfile(const Network& net, int z) const;
};

// One commodity's fixed route and boundaries, as seen by the allocator.
struct FlowPath {
  Route route;
  std::vector<double> t;
};

// Constraint row for one transmission: sum_i coeff[i] * l[z][i] >= bits.
struct HopDemand {
  int commodity = 0;
  int layer = 0;
  double bits = 0;
  std::vector<double> coeff;  // bits per unit share, per slot
};

std::vector<HopDemand> CapacityCoefficients(const Network& net,
                                            std::span<const CommoditySpec> commodities,
                                            std::span<const FlowPath> paths, double theta,
                                            int n_slots);

// A point of the allocation set at the given demands, or nullopt when it is
// empty.
std::optional<ResourceAllocation> FeasibilitySetCheck(std::span<const HopDemand> demands,
                                                      int n_commodities, int n_slots,
                                                      double horizon);

// True when `alloc` satisfies every demand (relative slack `tol`) and the
// per-slot share budget.
bool SatisfiesDemands(const ResourceAllocation& alloc, std::span<const HopDemand> demands,
                      double tol = 1e-7);

struct AllocationResult {
  double theta = kInf;
  bool feasible = false;
  ResourceAllocation allocation;
  int lp_solves = 0;
};

// Smallest leakage level whose allocation set is non-empty, for fixed paths.
AllocationResult AllocateResources(const Network& net, std::span<const CommoditySpec> commodities,
                                   std::span<const FlowPath> paths, int n_slots);

struct MultiOptions {
  int n_slots = 64;
  int max_iterations = 30;
  double share_tol = 1e-3;
};

struct MultiPlan {
  std::vector<Plan> plans;
  ResourceAllocation allocation;
  double theta = kInf;
  bool feasible = false;
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
  std::string diagnostics;
};

MultiPlan PlanMulti(const Network& net, std::span<const CommoditySpec> commodities,
                    const MultiOptions& options = {});

// Baseline: equal fixed shares 1/Z, each commodity planned independently.
MultiPlan PlanMultiEqualShare(const Network& net, std::span<const CommoditySpec> commodities,
                              const std::string& method, const MultiOptions& options = {});

}  // namespace aeroplan

#endif
