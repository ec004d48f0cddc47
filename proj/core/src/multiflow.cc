#include "aeroplan/multiflow.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/boundary.h"
#include "aeroplan/errors.h"
#include "aeroplan/link_weight.h"
#include "aeroplan/parallel.h"
#include "aeroplan/rng.h"
#include "aeroplan/simplex.h"
#include "aeroplan/units.h"

namespace aeroplan {
namespace {

int SlotOfCell(const Network& net, size_t cell, double slot_s, int n_slots) {
  double start = cell * net.dt();
  if (start >= net.horizon() - 1e-12) return -1;
  return std::min(n_slots - 1, static_cast<int>(start / slot_s));
}

double MaxShareChange(const ResourceAllocation& a, const ResourceAllocation& b) {
  double d = 0;
  for (size_t z = 0; z < a.shares.size(); ++z) {
    for (size_t i = 0; i < a.shares[z].size(); ++i) {
      d = std::max(d, std::abs(a.shares[z][i] - b.shares[z][i]));
    }
  }
  return d;
}

void FillLeftover(ResourceAllocation& alloc) {
  int z_count = static_cast<int>(alloc.shares.size());
  for (int i = 0; i < alloc.n_slots; ++i) {
    double s = alloc.SlotSum(i);
    double left = 1.0 - s;
    if (left <= 0) continue;
    for (int z = 0; z < z_count; ++z) {
      alloc.shares[z][i] += s > 0 ? left * alloc.shares[z][i] / s : left / z_count;
    }
  }
}

// Worst hop weight of a fixed path under a band profile.
double PathTheta(const Network& net, const FlowPath& path, double bits,
                 std::span<const double> profile) {
  double worst = 0;
  for (double w : HopWeights(net, path.route, path.t, bits, profile)) worst = std::max(worst, w);
  return worst;
}

std::optional<ResourceAllocation> CheckAt(const Network& net,
                                          std::span<const CommoditySpec> commodities,
                                          std::span<const FlowPath> paths, double theta,
                                          int n_slots) {
  std::vector<HopDemand> d = CapacityCoefficients(net, commodities, paths, theta, n_slots);
  return FeasibilitySetCheck(d, static_cast<int>(commodities.size()), n_slots, net.horizon());
}

}  // namespace

std::vector<CommoditySpec> ScenarioCommodities(const Network& net) {
  std::vector<CommoditySpec> out;
  int z = 0;
  for (const Commodity& c : net.scenario().commodities) {
    out.push_back({z++, net.IndexOfId(c.src), net.IndexOfId(c.dst), c.size_bits});
  }
  return out;
}

ResourceAllocation ResourceAllocation::Uniform(int n_commodities, int n_slots, double horizon,
                                               double share) {
  ResourceAllocation a;
  a.n_slots = n_slots;
  a.slot_s = horizon / n_slots;
  a.shares.assign(n_commodities, std::vector<double>(n_slots, share));
  return a;
}

double ResourceAllocation::SlotSum(int slot) const {
  double s = 0;
  for (const auto& row : shares) s += row[slot];
  return s;
}

std::vector<double> ResourceAllocation::CellProfile(const Network& net, int z) const {
  std::vector<double> p(net.n_cells(), 0.0);
  for (size_t c = 0; c < p.size(); ++c) {
    int slot = SlotOfCell(net, c, slot_s, n_slots);
    if (slot >= 0) p[c] = shares[z][slot];
  }
  return p;
}

std::vector<HopDemand> CapacityCoefficients(const Network& net,
                                            std::span<const CommoditySpec> commodities,
                                            std::span<const FlowPath> paths, double theta,
                                            int n_slots) {
  if (paths.size() != commodities.size()) throw InputError("allocation: one path per commodity required");
  double slot_s = net.horizon() / n_slots;
  double dt = net.dt();
  std::vector<HopDemand> out;
  for (size_t z = 0; z < commodities.size(); ++z) {
    const FlowPath& path = paths[z];
    for (int k = 0; k + 1 < path.route.size(); ++k) {
      if (path.route.IsVirtual(k)) continue;
      HopDemand h;
      h.commodity = static_cast<int>(z);
      h.layer = k;
      h.bits = commodities[z].size_bits;
      h.coeff.assign(n_slots, 0.0);
      const LinkProfile& p = net.Profile(path.route.nodes[k], path.route.nodes[k + 1]);
      double t0 = path.t[k];
      double t1 = std::min(path.t[k + 1], net.horizon());
      size_t c0 = static_cast<size_t>(std::max(0.0, t0) / dt);
      for (size_t c = c0; c < net.n_cells() && c * dt < t1; ++c) {
        double overlap = std::min(t1, (c + 1) * dt) - std::max(t0, c * dt);
        int slot = SlotOfCell(net, c, slot_s, n_slots);
        if (overlap <= 0 || slot < 0) continue;
        h.coeff[slot] += net.bandwidth() * p.Rate(theta, c) * overlap;
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

std::optional<ResourceAllocation> FeasibilitySetCheck(std::span<const HopDemand> demands,
                                                      int n_commodities, int n_slots,
                                                      double horizon) {
  int n = n_commodities * n_slots;
  PhaseOneSimplex lp(n);
  for (const HopDemand& d : demands) {
    if (d.bits <= 0) continue;
    std::vector<double> row(n, 0.0);
    for (int i = 0; i < n_slots; ++i) row[d.commodity * n_slots + i] = d.coeff[i] / d.bits;
    lp.AddConstraint(std::move(row), PhaseOneSimplex::Sense::kGreaterEqual, 1.0);
  }
  for (int i = 0; i < n_slots; ++i) {
    std::vector<double> row(n, 0.0);
    for (int z = 0; z < n_commodities; ++z) row[z * n_slots + i] = 1.0;
    lp.AddConstraint(std::move(row), PhaseOneSimplex::Sense::kLessEqual, 1.0);
  }
  std::optional<std::vector<double>> x = lp.FindFeasiblePoint();
  if (!x) return std::nullopt;
  ResourceAllocation a = ResourceAllocation::Uniform(n_commodities, n_slots, horizon, 0.0);
  for (int z = 0; z < n_commodities; ++z) {
    for (int i = 0; i < n_slots; ++i) a.shares[z][i] = std::min(1.0, (*x)[z * n_slots + i]);
  }
  return a;
}

bool SatisfiesDemands(const ResourceAllocation& alloc, std::span<const HopDemand> demands,
                      double tol) {
  for (int i = 0; i < alloc.n_slots; ++i) {
    if (alloc.SlotSum(i) > 1 + 1e-9) return false;
  }
  for (const auto& row : alloc.shares) {
    for (double l : row) {
      if (l < -1e-12 || l > 1 + 1e-12) return false;
    }
  }
  for (const HopDemand& d : demands) {
    double got = 0;
    for (int i = 0; i < alloc.n_slots; ++i) got += d.coeff[i] * alloc.shares[d.commodity][i];
    if (got < d.bits * (1 - tol)) return false;
  }
  return true;
}

AllocationResult AllocateResources(const Network& net, std::span<const CommoditySpec> commodities,
                                   std::span<const FlowPath> paths, int n_slots) {
  if (n_slots < 1) throw InputError("allocation: n_slots must be >= 1");
  int z_count = static_cast<int>(commodities.size());
  double cap = net.options().theta_cap_w;
  double rel_tol = net.options().theta_rel_tol;
  AllocationResult res;

  // Full band for everyone bounds from below; an equal split is feasible.
  ResourceAllocation full = ResourceAllocation::Uniform(z_count, n_slots, net.horizon(), 1.0);
  ResourceAllocation split =
      ResourceAllocation::Uniform(z_count, n_slots, net.horizon(), 1.0 / z_count);
  std::vector<double> full_profile = full.CellProfile(net, 0);
  std::vector<double> split_profile = split.CellProfile(net, 0);
  double lo = 0;
  double hi = 0;
  for (int z = 0; z < z_count; ++z) {
    lo = std::max(lo, PathTheta(net, paths[z], commodities[z].size_bits, full_profile));
    hi = std::max(hi, PathTheta(net, paths[z], commodities[z].size_bits, split_profile));
  }
  if (std::isinf(lo)) return res;
  hi = std::min(std::max(hi, lo), cap);

  std::optional<ResourceAllocation> at_hi = CheckAt(net, commodities, paths, hi, n_slots);
  ++res.lp_solves;
  while (!at_hi) {
    if (hi >= cap) return res;
    lo = hi;
    hi = std::min(2 * hi, cap);
    at_hi = CheckAt(net, commodities, paths, hi, n_slots);
    ++res.lp_solves;
  }
  if (lo > 0 && lo < hi) {
    std::optional<ResourceAllocation> at_lo = CheckAt(net, commodities, paths, lo, n_slots);
    ++res.lp_solves;
    if (at_lo) {
      hi = lo;
      at_hi = std::move(at_lo);
    }
  }
  while (lo > 0 && (hi - lo) / hi > rel_tol) {
    double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    std::optional<ResourceAllocation> at_mid = CheckAt(net, commodities, paths, mid, n_slots);
    ++res.lp_solves;
    if (at_mid) {
      hi = mid;
      at_hi = std::move(at_mid);
    } else {
      lo = mid;
    }
  }
  res.theta = hi;
  res.feasible = true;
  res.allocation = *std::move(at_hi);
  FillLeftover(res.allocation);
  return res;
}

MultiPlan PlanMulti(const Network& net, std::span<const CommoditySpec> commodities,
                    const MultiOptions& options) {
  int z_count = static_cast<int>(commodities.size());
  if (z_count == 0) throw InputError("plan-multi: no commodities");
  if (options.n_slots < 1) throw InputError("plan-multi: n_slots must be >= 1");
  double tol_t = net.options().convergence_fraction * net.horizon();

  std::vector<FlowState> states;
  for (const CommoditySpec& c : commodities) states.push_back(InitialFlowState(net, c.src, c.dst));

  ResourceAllocation alloc =
      ResourceAllocation::Uniform(z_count, options.n_slots, net.horizon(), 0.0);
  Rng rng = MakeStream(net.scenario().seed, StreamPurpose::kAllocationInit);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < options.n_slots; ++i) {
    double s = 0;
    for (int z = 0; z < z_count; ++z) s += alloc.shares[z][i] = u(rng);
    for (int z = 0; z < z_count; ++z) alloc.shares[z][i] /= s;
  }

  auto paths_of = [&](const std::vector<FlowState>& st) {
    std::vector<FlowPath> p;
    for (const FlowState& s : st) p.push_back({s.route, s.t});
    return p;
  };

  MultiPlan out;
  double current = kInf;
  double best = kInf;
  std::vector<FlowState> best_states;
  ResourceAllocation best_alloc;
  for (int it = 0; it < options.max_iterations; ++it) {
    std::vector<std::vector<double>> profiles(z_count);
    for (int z = 0; z < z_count; ++z) profiles[z] = alloc.CellProfile(net, z);

    std::vector<FlowState> next(z_count);
    ParallelFor(z_count, [&](size_t z) {
      const CommoditySpec& c = commodities[z];
      FlowState cand = AlternationStep(net, states[z], c.src, c.dst, c.size_bits, profiles[z]);
      FlowPath old{states[z].route, states[z].t};
      double old_theta = PathTheta(net, old, c.size_bits, profiles[z]);
      // Ties within the bisection tolerance still move the boundaries.
      double slack = 1 + net.options().theta_rel_tol;
      if (!std::isfinite(cand.theta) || cand.theta > old_theta * slack) {
        cand.route = states[z].route;
        cand.t = states[z].t;
        cand.theta = old_theta;
      }
      next[z] = std::move(cand);
    });
    double t_change = 0;
    for (int z = 0; z < z_count; ++z) {
      for (size_t k = 0; k < next[z].t.size(); ++k) {
        t_change = std::max(t_change, std::abs(next[z].t[k] - states[z].t[k]));
      }
    }
    std::vector<FlowPath> paths = paths_of(next);

    AllocationResult a = AllocateResources(net, commodities, paths, options.n_slots);
    // Keep the incumbent shares when they still meet the new paths' demands
    // at the previous level and the new solve came out higher.
    if (std::isfinite(current) && (!a.feasible || a.theta > current)) {
      std::vector<HopDemand> d = CapacityCoefficients(net, commodities, paths, current, options.n_slots);
      if (SatisfiesDemands(alloc, d)) {
        a.feasible = true;
        a.theta = current;
        a.allocation = alloc;
      }
    }
    ++out.iterations;
    states = std::move(next);
    double l_change = kInf;
    if (a.feasible) {
      l_change = MaxShareChange(a.allocation, alloc);
      alloc = std::move(a.allocation);
      current = a.theta;
      if (current < best) {
        best = current;
        best_states = states;
        best_alloc = alloc;
      }
    }
    // The trace follows the best pair found so far, which is what is returned.
    out.trace.push_back(best);
    if (a.feasible && l_change <= options.share_tol && t_change <= tol_t) {
      out.converged = true;
      break;
    }
  }
  if (std::isfinite(best)) {
    states = std::move(best_states);
    alloc = std::move(best_alloc);
    current = best;
  }

  // Drop caching time left by backtracking, then re-allocate.
  {
    std::vector<FlowState> polished = states;
    for (int z = 0; z < z_count; ++z) {
      std::vector<double> prof = alloc.CellProfile(net, z);
      BoundarySolution sol = OptimizeBoundaries(net, states[z].route, states[z].t, 0.0,
                                                commodities[z].size_bits, prof);
      if (sol.feasible) polished[z].t = sol.t;
    }
    std::vector<FlowPath> paths = paths_of(polished);
    AllocationResult a = AllocateResources(net, commodities, paths, options.n_slots);
    if (a.feasible && a.theta <= current) {
      states = std::move(polished);
      alloc = std::move(a.allocation);
      current = a.theta;
    }
  }

  out.allocation = alloc;
  out.theta = current;
  out.feasible = std::isfinite(current);
  for (int z = 0; z < z_count; ++z) {
    Plan p;
    p.method = "proposed";
    p.route = states[z].route;
    p.boundaries = states[z].t;
    p.iterations = out.iterations;
    p.converged = out.converged;
    std::vector<double> prof = alloc.CellProfile(net, z);
    FinalizePlan(net, commodities[z].size_bits, p, prof);
    if (!p.feasible) {
      out.diagnostics += (out.diagnostics.empty() ? "" : "; ") + std::string("commodity ") +
                         std::to_string(commodities[z].id) + " infeasible";
    }
    out.plans.push_back(std::move(p));
  }
  if (!out.feasible) {
    out.theta = kInf;
    if (out.diagnostics.empty()) out.diagnostics = "no feasible allocation";
  }
  return out;
}

MultiPlan PlanMultiEqualShare(const Network& net, std::span<const CommoditySpec> commodities,
                              const std::string& method, const MultiOptions& options) {
  int z_count = static_cast<int>(commodities.size());
  MultiPlan out;
  out.allocation = ResourceAllocation::Uniform(z_count, options.n_slots, net.horizon(), 1.0 / z_count);
  out.theta = 0;
  out.feasible = true;
  out.converged = true;
  out.iterations = 1;
  for (const CommoditySpec& c : commodities) {
    // A constant share s scales every rate by s, which is the same as moving
    // size/s bits over the full band.
    double bits = c.size_bits * z_count;
    Plan p;
    if (method == "aggregate") {
      p = BaselineAggregate(net, c.src, c.dst, bits);
    } else if (method == "spacetime") {
      p = BaselineSpacetime(net, c.src, c.dst, bits);
    } else if (method == "proposed") {
      p = PlanSingle(net, c.src, c.dst, bits);
    } else {
      throw InputError("unknown equal-share method '" + method + "'");
    }
    out.theta = std::max(out.theta, p.theta);
    if (!p.feasible) {
      out.feasible = false;
      out.diagnostics += (out.diagnostics.empty() ? "" : "; ") + std::string("commodity ") +
                         std::to_string(c.id) + " infeasible";
    }
    out.plans.push_back(std::move(p));
  }
  out.trace.push_back(out.theta);
  if (!out.feasible) out.theta = kInf;
  return out;
}

}  // namespace aeroplan
