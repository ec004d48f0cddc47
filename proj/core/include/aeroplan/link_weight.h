#ifndef AEROPLAN_LINK_WEIGHT_H
#define AEROPLAN_LINK_WEIGHT_H

#include <span>

#include "aeroplan/capacity.h"
#include "aeroplan/network.h"

namespace aeroplan {

// One transfer of `size_bits` from network node `tx` to `rx` inside
// [t_start, t_end). `bandwidth_scale`, when non-empty, gives the fraction of
// the band available in each grid cell.
struct HopSpec {
  int tx = 0;
  int rx = 0;
  double t_start = 0;
  double t_end = 0;
  double size_bits = 0;
  std::span<const double> bandwidth_scale = {};
};

struct LinkWeight {
  double theta = 0;  // W
  bool feasible = true;
  BoundMode mode = BoundMode::kApprox2;
  bool degenerate = false;  // no neighbor had positive gain somewhere
};

// Expected bits deliverable over the hop window at leakage level theta.
double Upsilon(const Network& net, const HopSpec& hop, double theta);

// Earliest t_end such that Upsilon over [t_start, t_end) reaches size_bits,
// or kInf when that would exceed `t_limit`.
double DeliveryTime(const Network& net, int tx, int rx, double theta, double t_start,
                    double size_bits, std::span<const double> bandwidth_scale,
                    double t_limit);

// Minimum leakage level that delivers the hop in its window. `initial_guess`
// (W), when positive, seeds the bracket; otherwise a closed-form estimate is
// used.
LinkWeight SolveP1(const Network& net, const HopSpec& hop, double initial_guess = 0);

// Bit tolerance for a hop of the given size.
double BitTolerance(double size_bits);

// Transmit power that pins the strongest instantaneous neighbor interference
// at theta. Returns p_max_w when every gain is zero.
double PowerPolicy(double theta, std::span<const double> neighbor_gains, double p_max_w = 1e3);

}  // namespace aeroplan

#endif
