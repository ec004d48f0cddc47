#include "aeroplan/replay.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/errors.h"
#include "aeroplan/link_weight.h"
#include "aeroplan/rng.h"

namespace aeroplan {
namespace {

struct FlowInput {
  const Plan* plan;
  double size_bits;
  std::vector<double> profile;  // empty = full band
};

ReplayReport Run(const Network& net, const std::vector<FlowInput>& flows, double theta,
                 int n_realizations, uint64_t seed) {
  if (n_realizations < 1) throw InputError("replay: n_realizations must be >= 1");
  ReplayReport rep;
  rep.theta_w = theta;
  rep.n_realizations = n_realizations;
  const std::vector<int>& nb = net.neighbors();
  rep.max_interference_w.assign(nb.size(), 0.0);
  if (!std::isfinite(theta)) throw InputError("replay: plan is infeasible");

  double dt = net.dt();
  double B = net.bandwidth();
  double noise = net.noise();
  std::vector<double> all_ratios;
  std::vector<double> h_nb(nb.size());
  for (size_t f = 0; f < flows.size(); ++f) {
    const Plan& plan = *flows[f].plan;
    FlowReplay fr;
    fr.size_bits = flows[f].size_bits;
    for (int r = 0; r < n_realizations; ++r) {
      Rng rng = MakeStream(seed, StreamPurpose::kReplay, f, r);
      std::vector<double> ratios;
      for (int k = 0; k + 1 < plan.route.size(); ++k) {
        if (plan.route.IsVirtual(k)) continue;
        int a = net.ScenarioIndex(plan.route.nodes[k]);
        int b = net.ScenarioIndex(plan.route.nodes[k + 1]);
        const LinkStats& link = net.radio_map().Link(a, b);
        std::vector<const LinkStats*> nl;
        for (int j : nb) nl.push_back(&net.radio_map().Link(a, j));
        double t0 = plan.boundaries[k];
        double t1 = plan.boundaries[k + 1];
        double bits = 0;
        size_t c0 = static_cast<size_t>(std::max(0.0, t0) / dt);
        for (size_t c = c0; c < net.n_cells() && c * dt < t1; ++c) {
          double overlap = std::min(t1, (c + 1) * dt) - std::max(t0, c * dt);
          if (overlap <= 0) continue;
          double scale = flows[f].profile.empty() ? 1.0 : flows[f].profile[c];
          double h_tx = SampleChannel(link, c * dt, rng);
          for (size_t j = 0; j < nb.size(); ++j) h_nb[j] = SampleChannel(*nl[j], c * dt, rng);
          double p = PowerPolicy(theta, h_nb);
          double worst = 0;
          for (size_t j = 0; j < nb.size(); ++j) {
            double i_j = p * h_nb[j];
            rep.max_interference_w[j] = std::max(rep.max_interference_w[j], i_j);
            worst = std::max(worst, i_j);
          }
          rep.max_policy_rel_error =
              std::max(rep.max_policy_rel_error, std::abs(worst - theta) / theta);
          ++rep.samples;
          if (scale > 0) bits += scale * B * std::log2(1.0 + p * h_tx / noise) * overlap;
        }
        ratios.push_back(fr.size_bits > 0 ? bits / fr.size_bits : 1.0);
      }
      double e2e = ratios.empty() ? 1.0 : *std::min_element(ratios.begin(), ratios.end());
      fr.hop_ratio.push_back(std::move(ratios));
      fr.end_to_end_ratio.push_back(e2e);
      all_ratios.push_back(e2e);
    }
    fr.median_ratio = Median(fr.end_to_end_ratio);
    rep.flows.push_back(std::move(fr));
  }
  rep.median_ratio = Median(all_ratios);
  return rep;
}

}  // namespace

double Median(std::vector<double> v) {
  if (v.empty()) return 0;
  size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + n / 2);
  return 0.5 * (lo + hi);
}

ReplayReport Replay(const Network& net, const Plan& plan, double size_bits, int n_realizations,
                    uint64_t seed) {
  return Run(net, {{&plan, size_bits, {}}}, plan.theta, n_realizations, seed);
}

ReplayReport ReplayMulti(const Network& net, const MultiPlan& plan,
                         const std::vector<CommoditySpec>& commodities, int n_realizations,
                         uint64_t seed) {
  std::vector<FlowInput> flows;
  for (size_t z = 0; z < commodities.size(); ++z) {
    flows.push_back({&plan.plans[z], commodities[z].size_bits,
                     plan.allocation.CellProfile(net, static_cast<int>(z))});
  }
  return Run(net, flows, plan.theta, n_realizations, seed);
}

}  // namespace aeroplan
