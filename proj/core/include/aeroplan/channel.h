#ifndef AEROPLAN_CHANNEL_H
#define AEROPLAN_CHANNEL_H

#include "aeroplan/trajectory.h"

namespace aeroplan {

// Path loss in dB: a + b*log10(d) + c*log10(f), d in meters, f in Hz.
struct PathLossModel {
  double a = 0;
  double b = 0;
  double c = 0;

  double Db(double distance_m, double carrier_hz) const;
};

// P(LOS) = 1 / (1 + scale * exp(-rate * (elevation_deg - offset_deg))).
struct LosProbabilityModel {
  double scale = 6.0;
  double rate = 0.15;
  double offset_deg = 6.0;

  double Probability(double elevation_deg) const;
};

// Log-normal shadowing with exponential decorrelation over traversed
// distance. `variance_db` is the variance of the dB value.
struct ShadowingModel {
  double mean_db = 0.0;
  double variance_db = 8.0;
  double corr_distance_m = 5.0;
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

enum class LosMode { kSampled, kForceLos, kForceNlos };

struct ChannelParams {
  double carrier_freq_hz = 3e9;
  double bandwidth_hz = 10e6;
  double noise_power_w = 1e-12;
  PathLossModel pathloss_los{22.0, 28.0, 20.0};
  PathLossModel pathloss_nlos{22.7, 36.7, 26.0};
  LosProbabilityModel los_prob;
  ShadowingModel shadow;
  Interval kappa_air_ground{1.0, 30.0};
  Interval kappa_air_air{30.0, 60.0};
  LosMode los_mode = LosMode::kSampled;
  double los_segment_s = 1.0;

  // Throws InputError when an invariant fails.
  void Validate() const;
};

// Elevation angle in degrees of the segment between two points, measured
// from the horizontal plane. Coincident points give 90.
double ElevationDeg(const Vec3& p, const Vec3& q);

}  // namespace aeroplan

#endif
