#include "aeroplan/boundary.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/errors.h"
#include "aeroplan/link_weight.h"
#include "aeroplan/units.h"

namespace aeroplan {

std::vector<double> UniformBoundaries(int m, double horizon) {
  std::vector<double> t(m, 0);
  for (int k = 1; k < m; ++k) t[k] = horizon * k / (m - 1);
  return t;
}

std::vector<double> ForwardBoundaries(const Network& net, const Route& route, double theta,
                                      std::span<const double> prev_t, double backtracking,
                                      double size_bits,
                                      std::span<const double> bandwidth_scale) {
  int m = route.size();
  if (prev_t.size() != static_cast<size_t>(m)) throw InputError("forward boundaries: prev_t size mismatch");
  double cap = net.horizon_cap();
  std::vector<double> t(m, kInf);
  t[0] = 0;
  for (int k = 0; k + 1 < m; ++k) {
    double next;
    if (route.IsVirtual(k)) {
      double span = std::max(0.0, prev_t[k + 1] - prev_t[k]);
      next = t[k] + backtracking * span;
    } else {
      next = DeliveryTime(net, route.nodes[k], route.nodes[k + 1], theta, t[k], size_bits,
                          bandwidth_scale, cap);
    }
    if (!(next <= cap)) break;
    t[k + 1] = next;
  }
  return t;
}

std::vector<double> HopWeights(const Network& net, const Route& route, std::span<const double> t,
                               double size_bits, std::span<const double> bandwidth_scale) {
  std::vector<double> w(route.size() > 0 ? route.size() - 1 : 0, 0);
  for (int k = 0; k + 1 < route.size(); ++k) {
    if (route.IsVirtual(k)) continue;
    HopSpec hop{route.nodes[k], route.nodes[k + 1], t[k], t[k + 1], size_bits, bandwidth_scale};
    LinkWeight lw = SolveP1(net, hop);
    w[k] = lw.feasible ? lw.theta : kInf;
  }
  return w;
}

BoundarySolution OptimizeBoundaries(const Network& net, const Route& route,
                                    std::span<const double> prev_t, double backtracking,
                                    double size_bits,
                                    std::span<const double> bandwidth_scale) {
  int m = route.size();
  double horizon = net.horizon();
  double rel_tol = net.options().theta_rel_tol;
  double cap = net.options().theta_cap_w;
  BoundarySolution sol;

  if (route.NumTransmissions() == 0 || size_bits <= 0) {
    sol.t = std::vector<double>(m, 0);
    sol.t[m - 1] = horizon;
    sol.converged = true;
    return sol;
  }

  auto end_time = [&](double theta) {
    return ForwardBoundaries(net, route, theta, prev_t, backtracking, size_bits, bandwidth_scale);
  };

  // No hop can do better than its weight over the whole horizon.
  double lo = 0;
  for (int k = 0; k + 1 < m; ++k) {
    if (route.IsVirtual(k)) continue;
    HopSpec hop{route.nodes[k], route.nodes[k + 1], 0, horizon, size_bits, bandwidth_scale};
    LinkWeight w = SolveP1(net, hop);
    if (!w.feasible) {
      sol.t = UniformBoundaries(m, horizon);
      sol.theta = kInf;
      sol.feasible = false;
      return sol;
    }
    lo = std::max(lo, w.theta);
  }

  std::vector<double> t = end_time(lo);
  ++sol.iterations;
  double hi = lo;
  std::vector<double> t_hi;
  if (t.back() <= horizon) {
    t_hi = std::move(t);
  } else {
    while (true) {
      if (hi >= cap) {
        sol.t = UniformBoundaries(m, horizon);
        sol.theta = kInf;
        sol.feasible = false;
        return sol;
      }
      lo = hi;
      hi = std::min(2 * hi, cap);
      t = end_time(hi);
      ++sol.iterations;
      if (t.back() <= horizon) {
        t_hi = std::move(t);
        break;
      }
    }
    while ((hi - lo) / hi > rel_tol) {
      double mid = std::sqrt(lo * hi);
      if (!(mid > lo && mid < hi)) break;
      t = end_time(mid);
      ++sol.iterations;
      if (t.back() <= horizon) {
        hi = mid;
        t_hi = std::move(t);
      } else {
        lo = mid;
      }
    }
  }
  t_hi[m - 1] = horizon;
  sol.t = std::move(t_hi);
  sol.theta = hi;
  sol.converged = true;
  return sol;
}

}  // namespace aeroplan
