#include "aeroplan/planner.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aeroplan/errors.h"
#include "aeroplan/link_weight.h"
#include "aeroplan/units.h"

namespace aeroplan {
namespace {

double SupNormChange(std::span<const double> a, std::span<const double> b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::isinf(a[i]) || std::isinf(b[i])) return kInf;
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

// Route of length m that caches at src, visits `relays` in order, and ends
// at dst.
Route PaddedRoute(int m, int src, std::span<const int> relays, int dst) {
  Route r;
  int pad = m - 2 - static_cast<int>(relays.size());
  for (int i = 0; i <= pad; ++i) r.nodes.push_back(src);
  r.nodes.insert(r.nodes.end(), relays.begin(), relays.end());
  r.nodes.push_back(dst);
  return r;
}

Plan PlanFromSolution(std::string method, Route route, const BoundarySolution& sol) {
  Plan p;
  p.method = std::move(method);
  p.route = std::move(route);
  p.boundaries = sol.t;
  p.theta = sol.theta;
  p.feasible = sol.feasible;
  p.iterations = 1;
  p.converged = sol.converged;
  return p;
}

}  // namespace

std::vector<int> FlowNodes(const Network& net, int src, int dst) {
  if (src == dst) throw InputError("flow endpoints must differ");
  std::vector<int> nodes;
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == src || v == dst || net.IsAerial(v)) nodes.push_back(v);
  }
  return nodes;
}

void FinalizePlan(const Network& net, double size_bits, Plan& plan,
                  std::span<const double> bandwidth_scale) {
  if (!plan.feasible) {
    plan.theta = kInf;
    plan.hop_weights.assign(plan.route.size() - 1, kInf);
    return;
  }
  plan.hop_weights = HopWeights(net, plan.route, plan.boundaries, size_bits, bandwidth_scale);
  double worst = 0;
  for (double w : plan.hop_weights) worst = std::max(worst, w);
  plan.theta = worst;
  plan.feasible = std::isfinite(worst);
}

FlowState InitialFlowState(const Network& net, int src, int dst) {
  FlowState s;
  s.nodes = FlowNodes(net, src, dst);
  int m = static_cast<int>(s.nodes.size());
  s.t = UniformBoundaries(m, net.horizon());
  s.route = PaddedRoute(m, src, {}, dst);
  return s;
}

FlowState AlternationStep(const Network& net, const FlowState& state, int src, int dst,
                          double size_bits, std::span<const double> bandwidth_scale) {
  SpaceTimeGraph g = BuildGraph(net, state.nodes, state.t, size_bits, bandwidth_scale);
  BottleneckResult path = BottleneckPath(net, g, src, dst);
  BoundarySolution sol = OptimizeBoundaries(net, path.route, state.t, net.options().backtracking,
                                            size_bits, bandwidth_scale);
  FlowState next;
  next.nodes = state.nodes;
  next.route = std::move(path.route);
  next.theta = sol.theta;
  next.t = sol.feasible ? std::move(sol.t) : state.t;
  return next;
}

Plan PlanSingle(const Network& net, int src, int dst, double size_bits,
                std::span<const double> bandwidth_scale) {
  const PlannerOptions& opt = net.options();
  FlowState state = InitialFlowState(net, src, dst);
  Plan plan;
  plan.method = "proposed";
  plan.converged = false;
  FlowState best;
  double tol_t = opt.convergence_fraction * net.horizon();
  for (int it = 0; it < opt.max_outer_iterations; ++it) {
    FlowState next = AlternationStep(net, state, src, dst, size_bits, bandwidth_scale);
    plan.trace.push_back(next.theta);
    ++plan.iterations;
    double change = SupNormChange(next.t, state.t);
    if (next.theta < best.theta || best.route.nodes.empty()) best = next;
    state = std::move(next);
    if (change <= tol_t) {
      plan.converged = true;
      break;
    }
  }

  // Drop whatever caching time backtracking left on the final route.
  BoundarySolution polished = OptimizeBoundaries(net, best.route, best.t, 0.0, size_bits,
                                                 bandwidth_scale);
  plan.route = best.route;
  if (polished.feasible && polished.theta <= best.theta) {
    plan.boundaries = polished.t;
    plan.feasible = true;
  } else {
    plan.boundaries = best.t;
    plan.feasible = std::isfinite(best.theta);
  }
  FinalizePlan(net, size_bits, plan, bandwidth_scale);
  return plan;
}

Plan BruteForce(const Network& net, int src, int dst, double size_bits, int max_nodes) {
  std::vector<int> nodes = FlowNodes(net, src, dst);
  int m = static_cast<int>(nodes.size());
  if (m > max_nodes) {
    throw OracleScaleExceeded(std::to_string(m) + " candidate nodes, limit " +
                              std::to_string(max_nodes));
  }
  std::vector<int> relays;
  for (int v : nodes) {
    if (v != src && v != dst) relays.push_back(v);
  }
  std::vector<double> uniform = UniformBoundaries(m, net.horizon());

  Plan best;
  best.method = "brute";
  best.theta = kInf;
  best.feasible = false;
  best.route = PaddedRoute(m, src, {}, dst);
  best.boundaries = uniform;
  int candidates = 0;

  std::vector<int> chosen;
  std::vector<bool> used(relays.size(), false);
  auto evaluate = [&] {
    ++candidates;
    Route r = PaddedRoute(m, src, chosen, dst);
    BoundarySolution sol = OptimizeBoundaries(net, r, uniform, 0.0, size_bits);
    if (!sol.feasible) return;
    Plan p = PlanFromSolution("brute", std::move(r), sol);
    FinalizePlan(net, size_bits, p);
    if (p.theta < best.theta) best = std::move(p);
  };
  // Enumerate sequences by length, then lexicographically.
  for (size_t len = 0; len <= relays.size(); ++len) {
    auto rec = [&](auto&& self) -> void {
      if (chosen.size() == len) {
        evaluate();
        return;
      }
      for (size_t i = 0; i < relays.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        chosen.push_back(relays[i]);
        self(self);
        chosen.pop_back();
        used[i] = false;
      }
    };
    rec(rec);
  }
  best.method = "brute";
  best.candidates = candidates;
  best.iterations = 1;
  best.converged = true;
  if (!best.feasible) FinalizePlan(net, size_bits, best);
  return best;
}

std::vector<double> AverageCapacityMatrix(const Network& net, std::span<const int> nodes) {
  int m = static_cast<int>(nodes.size());
  std::vector<double> c(static_cast<size_t>(m) * m, 0.0);
  size_t cells = std::min(net.n_cells(),
                          static_cast<size_t>(std::ceil(net.horizon() / net.dt() - 1e-9)));
  cells = std::max<size_t>(cells, 1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const LinkStats& s = net.radio_map().Link(net.ScenarioIndex(nodes[a]), net.ScenarioIndex(nodes[b]));
      double sum = 0;
      for (size_t i = 0; i < cells; ++i) sum += std::log2(1.0 + s.g[i] / net.noise());
      c[a * m + b] = sum / cells;
    }
  }
  return c;
}

Plan BaselineAggregate(const Network& net, int src, int dst, double size_bits) {
  std::vector<int> nodes = FlowNodes(net, src, dst);
  int m = static_cast<int>(nodes.size());
  std::vector<double> cap = AverageCapacityMatrix(net, nodes);
  int s = static_cast<int>(std::find(nodes.begin(), nodes.end(), src) - nodes.begin());
  int d = static_cast<int>(std::find(nodes.begin(), nodes.end(), dst) - nodes.begin());

  // best[h][v]: least sum of 1/C over walks of exactly h edges from s to v.
  std::vector<std::vector<double>> best(m, std::vector<double>(m, kInf));
  std::vector<std::vector<int>> parent(m, std::vector<int>(m, -1));
  best[0][s] = 0;
  for (int h = 1; h < m; ++h) {
    for (int v = 0; v < m; ++v) {
      for (int u = 0; u < m; ++u) {
        if (u == v || std::isinf(best[h - 1][u]) || cap[u * m + v] <= 0) continue;
        double c = best[h - 1][u] + 1.0 / cap[u * m + v];
        if (c < best[h][v]) {
          best[h][v] = c;
          parent[h][v] = u;
        }
      }
    }
  }
  int best_h = -1;
  double best_cost = kInf;
  for (int h = 1; h < m; ++h) {
    double c = h * best[h][d];
    if (c < best_cost) {
      best_cost = c;
      best_h = h;
    }
  }
  Plan plan;
  plan.method = "aggregate";
  if (best_h < 0) {
    plan.route = PaddedRoute(m, src, {}, dst);
    plan.boundaries = UniformBoundaries(m, net.horizon());
    plan.feasible = false;
    FinalizePlan(net, size_bits, plan);
    return plan;
  }
  std::vector<int> relays;
  for (int h = best_h, v = d; h > 1; --h) {
    v = parent[h][v];
    relays.push_back(nodes[v]);
  }
  std::reverse(relays.begin(), relays.end());
  Route r = PaddedRoute(m, src, relays, dst);
  BoundarySolution sol = OptimizeBoundaries(net, r, UniformBoundaries(m, net.horizon()), 0.0, size_bits);
  plan = PlanFromSolution("aggregate", std::move(r), sol);
  FinalizePlan(net, size_bits, plan);
  return plan;
}

Plan BaselineSpacetime(const Network& net, int src, int dst, double size_bits) {
  std::vector<int> nodes = FlowNodes(net, src, dst);
  std::vector<double> t = UniformBoundaries(static_cast<int>(nodes.size()), net.horizon());
  SpaceTimeGraph g = BuildGraph(net, nodes, t, size_bits);
  BottleneckResult path = BottleneckPath(net, g, src, dst);
  Plan plan;
  plan.method = "spacetime";
  plan.route = std::move(path.route);
  plan.boundaries = std::move(t);
  plan.feasible = std::isfinite(path.theta);
  plan.iterations = 1;
  FinalizePlan(net, size_bits, plan);
  return plan;
}

}  // namespace aeroplan
