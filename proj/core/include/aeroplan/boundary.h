#ifndef AEROPLAN_BOUNDARY_H
#define AEROPLAN_BOUNDARY_H

#include <span>
#include <vector>

#include "aeroplan/network.h"
#include "aeroplan/space_time_graph.h"

namespace aeroplan {

struct BoundarySolution {
  std::vector<double> t;
  double theta = 0;
  int iterations = 0;
  bool converged = false;
  bool feasible = true;
};

// Boundaries produced by sending the package along `route` at leakage
// `theta` as early as possible. Caching hops additionally hold for
// `backtracking` times their previous span. Entries past the horizon cap are
// +inf.
std::vector<double> ForwardBoundaries(const Network& net, const Route& route, double theta,
                                      std::span<const double> prev_t, double backtracking,
                                      double size_bits,
                                      std::span<const double> bandwidth_scale = {});

// Smallest leakage level whose forward construction finishes by the horizon.
// The last boundary of the result is pinned to the horizon.
BoundarySolution OptimizeBoundaries(const Network& net, const Route& route,
                                    std::span<const double> prev_t, double backtracking,
                                    double size_bits,
                                    std::span<const double> bandwidth_scale = {});

// Per-hop single-link weights at the given boundaries (0 on caching hops).
std::vector<double> HopWeights(const Network& net, const Route& route,
                               std::span<const double> t, double size_bits,
                               std::span<const double> bandwidth_scale = {});

// {k * T / (M - 1)}.
std::vector<double> UniformBoundaries(int m, double horizon);

}  // namespace aeroplan

#endif
