#ifndef AEROPLAN_PLANNER_H
#define AEROPLAN_PLANNER_H

#include <span>
#include <string>
#include <vector>

#include "aeroplan/boundary.h"
#include "aeroplan/network.h"
#include "aeroplan/space_time_graph.h"
#include "aeroplan/units.h"

namespace aeroplan {

struct Plan {
  std::string method;
  Route route;
  std::vector<double> boundaries;
  double theta = 0;  // W; +inf when infeasible
  bool feasible = true;
  std::vector<double> hop_weights;  // per layer, 0 on caching hops
  std::vector<double> trace;        // leakage after each outer iteration
  int iterations = 0;
  bool converged = true;
  int candidates = 0;  // routes examined (exhaustive search only)
};

// Network indices the planner may route over for one flow: the endpoints
// and every aerial node, in index order.
std::vector<int> FlowNodes(const Network& net, int src, int dst);

// Graph dimension, initial boundaries and per-flow state for the
// alternating route/boundary optimization.
struct FlowState {
  std::vector<int> nodes;
  Route route;
  std::vector<double> t;
  double theta = kInf;
};

FlowState InitialFlowState(const Network& net, int src, int dst);

// One outer iteration: build the graph at state.t, take the bottleneck
// route, re-optimize boundaries with backtracking. Returns the new state.
FlowState AlternationStep(const Network& net, const FlowState& state, int src, int dst,
                          double size_bits, std::span<const double> bandwidth_scale = {});

// Route and boundaries for moving size_bits from src to dst (network
// indices) with minimal worst-case leakage.
Plan PlanSingle(const Network& net, int src, int dst, double size_bits,
                std::span<const double> bandwidth_scale = {});

// Exhaustive search over loop-free relay sequences. Refuses flows with more
// than `max_nodes` candidate nodes.
Plan BruteForce(const Network& net, int src, int dst, double size_bits, int max_nodes = 8);

// Route by average capacity at unit transmit power (cost = edges * sum of
// 1/C), then boundary optimization on that route.
Plan BaselineAggregate(const Network& net, int src, int dst, double size_bits);

// Bottleneck route on the uniform boundary grid, without boundary
// optimization.
Plan BaselineSpacetime(const Network& net, int src, int dst, double size_bits);

// Time-averaged capacity matrix log2(1 + g / noise) over [0, T] among
// `nodes`, row-major.
std::vector<double> AverageCapacityMatrix(const Network& net, std::span<const int> nodes);

// Fills hop_weights, theta and feasibility from route + boundaries.
void FinalizePlan(const Network& net, double size_bits, Plan& plan,
                  std::span<const double> bandwidth_scale = {});

}  // namespace aeroplan

#endif
