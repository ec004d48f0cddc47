#include "aeroplan/scenario_gen.h"

#include <cmath>
#include <numbers>

#include "aeroplan/errors.h"
#include "aeroplan/rng.h"

namespace aeroplan {

void ScenarioKnobs::Validate() const {
  if (num_nodes < 2) throw InputError("knobs: M must be >= 2");
  if (num_neighbors < 1) throw InputError("knobs: N must be >= 1");
  if (!(horizon_s > 0)) throw InputError("knobs: T must be > 0");
  if (!(size_bits >= 0)) throw InputError("knobs: S must be >= 0");
  if (num_commodities < 1) throw InputError("knobs: Z must be >= 1");
  if (!(speed_min >= 0) || !(speed_max >= speed_min)) throw InputError("knobs: invalid speed range");
  if (!(hover_max_s >= 0)) throw InputError("knobs: hover must be >= 0");
  if (!(corridor_length_m > 0) || !(corridor_width_m > 0) || !(strip_width_m > 0) ||
      3 * strip_width_m > corridor_length_m) {
    throw InputError("knobs: invalid corridor geometry");
  }
  channel.Validate();
}

Scenario GenerateScenario(uint64_t seed, const ScenarioKnobs& k) {
  k.Validate();
  Rng rng = MakeStream(seed, StreamPurpose::kScenario);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  double L = k.corridor_length_m;
  double W = k.corridor_width_m;
  double strip = k.strip_width_m;

  Scenario s;
  s.seed = seed;
  s.horizon_s = k.horizon_s;
  s.channel = k.channel;
  int pairs = k.segments ? 1 : k.num_commodities;
  int relays = k.num_nodes - 2;
  int next_id = 1;

  std::vector<int> sources, destinations;
  for (int z = 0; z < pairs; ++z) {
    Vec3 p{uni(0, strip), uni(0, W), 0};
    sources.push_back(next_id);
    s.nodes.push_back({next_id++, NodeRole::kSource, Trajectory::Static(p)});
  }
  for (int r = 0; r < relays; ++r) {
    double speed = uni(k.speed_min, k.speed_max);
    if (r == 4) {
      double radius = uni(0.15 * L, 0.3 * L);
      Vec3 c{L / 2, W / 2, k.patrol_alt_m};
      double period = speed > 0 ? 2 * std::numbers::pi * radius / speed : 1.0;
      s.nodes.push_back({next_id++, NodeRole::kPatrolUav,
                         Trajectory::Circular(c, radius, speed, uni(0, period))});
      continue;
    }
    double hover = uni(0, k.hover_max_s);
    Vec3 a, b;
    if (r % 2 == 0) {
      double y = uni(0, W);
      a = {uni(0, 0.4 * L), y, k.cargo_horizontal_alt_m};
      b = {uni(0.6 * L, L), y, k.cargo_horizontal_alt_m};
    } else {
      double x = uni(0.2 * L, 0.8 * L);
      a = {x, uni(0, 0.2 * W), k.cargo_vertical_alt_m};
      b = {x, uni(0.8 * W, W), k.cargo_vertical_alt_m};
    }
    double travel = speed > 0 ? Distance(a, b) / speed : 0;
    double period = 2 * (travel + hover);
    s.nodes.push_back({next_id++, NodeRole::kCargoUav,
                       Trajectory::LinearShuttle(a, b, speed, hover, uni(0, std::max(period, 1e-9)))});
  }
  for (int z = 0; z < pairs; ++z) {
    Vec3 p{uni(L - strip, L), uni(0, W), 0};
    destinations.push_back(next_id);
    s.nodes.push_back({next_id++, NodeRole::kDestination, Trajectory::Static(p)});
  }
  for (int j = 0; j < k.num_neighbors; ++j) {
    Vec3 p{uni((L - strip) / 2, (L + strip) / 2), uni(0, W), k.neighbor_alt_m};
    s.nodes.push_back({next_id++, NodeRole::kNeighbor, Trajectory::Static(p)});
  }
  for (int z = 0; z < k.num_commodities; ++z) {
    if (k.segments) {
      s.commodities.push_back({sources[0], destinations[0], k.size_bits / k.num_commodities});
    } else {
      s.commodities.push_back({sources[z], destinations[z], k.size_bits});
    }
  }
  return s;
}

}  // namespace aeroplan
