#include "aeroplan/channel.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aeroplan/errors.h"
#include "aeroplan/trajectory.h"

namespace aeroplan {

double PathLossModel::Db(double distance_m, double carrier_hz) const {
  double d = std::max(distance_m, 1.0);
  return a + b * std::log10(d) + c * std::log10(carrier_hz);
}

double LosProbabilityModel::Probability(double elevation_deg) const {
  return 1.0 / (1.0 + scale * std::exp(-rate * (elevation_deg - offset_deg)));
}

double ElevationDeg(const Vec3& p, const Vec3& q) {
  Vec3 d = q - p;
  double h = HorizontalNorm(d);
  double v = std::abs(d.z);
  if (h == 0 && v == 0) return 90.0;
  return std::atan2(v, h) * 180.0 / std::numbers::pi;
}

void ChannelParams::Validate() const {
  if (!(carrier_freq_hz > 0)) throw InputError("channel: carrier_freq_hz must be > 0");
  if (!(bandwidth_hz > 0)) throw InputError("channel: bandwidth_hz must be > 0");
  if (!(noise_power_w > 0)) throw InputError("channel: noise_power_w must be > 0");
  if (!(shadow.variance_db >= 0)) throw InputError("channel: shadow variance must be >= 0");
  if (!(shadow.corr_distance_m > 0)) {
    throw InputError("channel: shadow correlation distance must be > 0");
  }
  for (const Interval& k : {kappa_air_ground, kappa_air_air}) {
    if (!(k.lo > 0) || !(k.hi >= k.lo)) {
      throw InputError("channel: kappa intervals must be positive and ordered");
    }
  }
  if (!(los_segment_s > 0)) throw InputError("channel: los_segment_s must be > 0");
}

}  // namespace aeroplan
