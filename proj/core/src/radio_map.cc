#include "aeroplan/radio_map.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/errors.h"

namespace aeroplan {

size_t LinkStats::CellAt(double t) const {
  if (!(t > 0)) return 0;
  size_t i = static_cast<size_t>(t / dt);
  return std::min(i, g.size() - 1);
}

TimeGrid TimeGrid::Covering(double duration_s, double dt_s) {
  if (!(dt_s > 0)) throw InputError("dt must be > 0");
  TimeGrid g;
  g.dt_s = dt_s;
  g.n_samples = static_cast<size_t>(std::ceil(duration_s / dt_s - 1e-9)) + 1;
  return g;
}

LinkStats EvalRadioMap(const Scenario& scenario, int m, int n, const TimeGrid& grid) {
  if (m == n) throw InputError("radio map: link endpoints must differ");
  if (m > n) std::swap(m, n);
  const Node& a = scenario.nodes.at(m);
  const Node& b = scenario.nodes.at(n);
  const ChannelParams& ch = scenario.channel;
  bool air_air = IsAerial(a.role) && IsAerial(b.role);

  LinkStats s;
  s.dt = grid.dt_s;
  s.g.resize(grid.n_samples);

  Rng kappa_rng = MakeStream(scenario.seed, StreamPurpose::kKappa, m, n);
  const Interval& kr = air_air ? ch.kappa_air_air : ch.kappa_air_ground;
  double kappa = std::uniform_real_distribution<double>(kr.lo, kr.hi)(kappa_rng);
  if (kr.hi == kr.lo) kappa = kr.lo;
  s.kappa.assign(grid.n_samples, kappa);

  Rng shadow_rng = MakeStream(scenario.seed, StreamPurpose::kShadowing, m, n);
  Rng los_rng = MakeStream(scenario.seed, StreamPurpose::kLosState, m, n);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sigma = std::sqrt(ch.shadow.variance_db);

  double shadow = sigma * normal(shadow_rng);
  Vec3 prev_a = a.trajectory.PositionAt(0);
  Vec3 prev_b = b.trajectory.PositionAt(0);
  long segment = -1;
  bool los = true;
  for (size_t i = 0; i < grid.n_samples; ++i) {
    double t = i * grid.dt_s;
    Vec3 pa = a.trajectory.PositionAt(t);
    Vec3 pb = b.trajectory.PositionAt(t);
    if (i > 0) {
      double moved = Distance(pa, prev_a) + Distance(pb, prev_b);
      double rho = std::exp(-moved / ch.shadow.corr_distance_m);
      shadow = rho * shadow + std::sqrt(1 - rho * rho) * sigma * normal(shadow_rng);
    }
    prev_a = pa;
    prev_b = pb;

    long seg = static_cast<long>(std::floor(t / ch.los_segment_s + 1e-9));
    if (seg != segment) {
      segment = seg;
      double u = uniform(los_rng);
      switch (ch.los_mode) {
        case LosMode::kForceLos:
          los = true;
          break;
        case LosMode::kForceNlos:
          los = false;
          break;
        case LosMode::kSampled:
          los = air_air || u < ch.los_prob.Probability(ElevationDeg(pa, pb));
          break;
      }
    }
    const PathLossModel& pl = los ? ch.pathloss_los : ch.pathloss_nlos;
    double loss_db = pl.Db(Distance(pa, pb), ch.carrier_freq_hz) + ch.shadow.mean_db + shadow;
    s.g[i] = std::pow(10.0, -loss_db / 10.0);
  }
  return s;
}

double SampleChannel(const LinkStats& stats, double t, Rng& rng) {
  size_t i = stats.CellAt(t);
  if (stats.g[i] <= 0) return 0;
  UnitGamma xi(stats.kappa[i]);
  return stats.g[i] * xi(rng);
}

RadioMap::RadioMap(const Scenario& scenario, TimeGrid grid)
    : scenario_(scenario),
      grid_(grid),
      n_nodes_(scenario.nodes.size()),
      slots_(new Slot[n_nodes_ * n_nodes_]) {}

const LinkStats& RadioMap::Link(int m, int n) const {
  if (m > n) std::swap(m, n);
  Slot& slot = slots_[m * n_nodes_ + n];
  std::call_once(slot.once, [&] { slot.stats = EvalRadioMap(scenario_, m, n, grid_); });
  return slot.stats;
}

}  // namespace aeroplan
