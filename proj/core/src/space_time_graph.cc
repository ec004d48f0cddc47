#include "aeroplan/space_time_graph.h"

#include <algorithm>
#include <climits>

#include "aeroplan/errors.h"
#include "aeroplan/link_weight.h"
#include "aeroplan/parallel.h"
#include "aeroplan/units.h"

namespace aeroplan {

SpaceTimeGraph SpaceTimeGraph::Empty(std::vector<int> nodes, std::vector<double> boundaries) {
  SpaceTimeGraph g;
  g.nodes = std::move(nodes);
  g.boundaries = std::move(boundaries);
  int m = g.size();
  g.weights.assign(static_cast<size_t>(std::max(0, m - 1)) * m * m, kInf);
  for (int k = 0; k + 1 < m; ++k) {
    for (int a = 0; a < m; ++a) g.Weight(k, a, a) = 0;
  }
  return g;
}

int Route::NumTransmissions() const {
  int n = 0;
  for (int k = 0; k + 1 < size(); ++k) n += IsVirtual(k) ? 0 : 1;
  return n;
}

SpaceTimeGraph BuildGraph(const Network& net, std::span<const int> nodes,
                          std::span<const double> boundaries, double size_bits,
                          std::span<const double> bandwidth_scale) {
  int m = static_cast<int>(nodes.size());
  if (m < 2 || boundaries.size() != nodes.size()) {
    throw InputError("space-time graph: need one boundary per node and at least two nodes");
  }
  for (int k = 0; k + 1 < m; ++k) {
    if (boundaries[k + 1] < boundaries[k]) throw InputError("space-time graph: boundaries must be non-decreasing");
  }
  SpaceTimeGraph g = SpaceTimeGraph::Empty(std::vector<int>(nodes.begin(), nodes.end()),
                                           std::vector<double>(boundaries.begin(), boundaries.end()));
  size_t pairs = static_cast<size_t>(m) * (m - 1);
  ParallelFor((m - 1) * pairs, [&](size_t task) {
    int k = static_cast<int>(task / pairs);
    size_t r = task % pairs;
    int a = static_cast<int>(r / (m - 1));
    int b = static_cast<int>(r % (m - 1));
    if (b >= a) ++b;
    HopSpec hop{g.nodes[a], g.nodes[b], g.boundaries[k], g.boundaries[k + 1], size_bits,
                bandwidth_scale};
    LinkWeight w = SolveP1(net, hop);
    g.Weight(k, a, b) = w.feasible ? w.theta : kInf;
  });
  return g;
}

BottleneckResult BottleneckPath(const SpaceTimeGraph& graph, int src, int dst,
                                std::span<const int> ids) {
  int m = graph.size();
  if (src < 0 || src >= m || dst < 0 || dst >= m) throw InputError("bottleneck path: endpoint out of range");
  std::vector<int> id(m);
  for (int p = 0; p < m; ++p) id[p] = ids.empty() ? graph.nodes[p] : ids[p];

  // Pass 1: optimal bottleneck value.
  std::vector<double> dp(m, kInf), next(m);
  dp[src] = 0;
  for (int k = 0; k + 1 < m; ++k) {
    for (int b = 0; b < m; ++b) {
      double best = kInf;
      for (int a = 0; a < m; ++a) best = std::min(best, std::max(dp[a], graph.Weight(k, a, b)));
      next[b] = best;
    }
    dp.swap(next);
  }
  double theta = dp[dst];

  // Pass 2: among routes using only edges <= theta, fewest transmissions,
  // then lexicographically smallest ids.
  std::vector<std::vector<int>> cost(m, std::vector<int>(m, INT_MAX));
  cost[m - 1][dst] = 0;
  for (int k = m - 2; k >= 0; --k) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (cost[k + 1][b] == INT_MAX || !(graph.Weight(k, a, b) <= theta)) continue;
        cost[k][a] = std::min(cost[k][a], cost[k + 1][b] + (a != b ? 1 : 0));
      }
    }
  }
  BottleneckResult result;
  result.theta = theta;
  if (cost[0][src] == INT_MAX) {
    // Only reachable when theta is finite but rounding broke ties; cannot
    // happen with exact comparisons. Fall back to the direct route.
    result.route.nodes.assign(m, graph.nodes[src]);
    result.route.nodes[m - 1] = graph.nodes[dst];
    return result;
  }
  std::vector<int> order(m);
  for (int p = 0; p < m; ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return id[x] < id[y]; });
  int at = src;
  result.route.nodes.push_back(graph.nodes[at]);
  for (int k = 0; k + 1 < m; ++k) {
    for (int b : order) {
      if (cost[k + 1][b] == INT_MAX || !(graph.Weight(k, at, b) <= theta)) continue;
      if (cost[k + 1][b] + (at != b ? 1 : 0) != cost[k][at]) continue;
      at = b;
      break;
    }
    result.route.nodes.push_back(graph.nodes[at]);
  }
  return result;
}

BottleneckResult BottleneckPath(const Network& net, const SpaceTimeGraph& graph, int src, int dst) {
  auto pos = [&](int v) {
    auto it = std::find(graph.nodes.begin(), graph.nodes.end(), v);
    if (it == graph.nodes.end()) throw InputError("bottleneck path: endpoint not in graph");
    return static_cast<int>(it - graph.nodes.begin());
  };
  std::vector<int> ids(graph.size());
  for (int p = 0; p < graph.size(); ++p) ids[p] = net.NodeId(graph.nodes[p]);
  return BottleneckPath(graph, pos(src), pos(dst), ids);
}

}  // namespace aeroplan
