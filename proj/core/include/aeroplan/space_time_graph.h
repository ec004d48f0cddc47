#ifndef AEROPLAN_SPACE_TIME_GRAPH_H
#define AEROPLAN_SPACE_TIME_GRAPH_H

#include <span>
#include <vector>

#include "aeroplan/network.h"

namespace aeroplan {

// Layered graph over M network nodes. Layer k spans [t_k, t_{k+1}); the
// weight of edge a -> b in layer k is the leakage level needed to move the
// package from a to b in that window. Self edges (caching) weigh 0;
// infeasible edges weigh +inf. Node positions 0..M-1 map to network indices
// through `nodes`.
struct SpaceTimeGraph {
  std::vector<int> nodes;
  std::vector<double> boundaries;
  std::vector<double> weights;  // [(k * M + a) * M + b]

  int size() const { return static_cast<int>(nodes.size()); }
  double Weight(int k, int a, int b) const { return weights[(k * size() + a) * size() + b]; }
  double& Weight(int k, int a, int b) { return weights[(k * size() + a) * size() + b]; }

  // Empty graph with all off-diagonal weights +inf.
  static SpaceTimeGraph Empty(std::vector<int> nodes, std::vector<double> boundaries);
};

// A fixed-length sequence of network indices, one per layer boundary.
// Consecutive repeats are caching (virtual) hops.
struct Route {
  std::vector<int> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  bool IsVirtual(int k) const { return nodes[k] == nodes[k + 1]; }
  int NumTransmissions() const;
  bool operator==(const Route&) const = default;
};

// Builds the graph over `nodes` (network indices) for a package of
// size_bits. `boundaries` must be non-decreasing with one entry per node.
SpaceTimeGraph BuildGraph(const Network& net, std::span<const int> nodes,
                          std::span<const double> boundaries, double size_bits,
                          std::span<const double> bandwidth_scale = {});

struct BottleneckResult {
  Route route;
  double theta = 0;
};

// Minimax path from `src` in the first layer to `dst` in the last (network
// indices). Ties prefer fewer transmissions, then the lexicographically
// smallest sequence of node ids. theta is +inf when no feasible route exists.
BottleneckResult BottleneckPath(const Network& net, const SpaceTimeGraph& graph, int src, int dst);

// Same, on a bare graph whose node ids are the positions themselves.
BottleneckResult BottleneckPath(const SpaceTimeGraph& graph, int src, int dst,
                                std::span<const int> ids = {});

}  // namespace aeroplan

#endif
