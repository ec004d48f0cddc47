#ifndef AEROPLAN_CAPACITY_H
#define AEROPLAN_CAPACITY_H

#include <span>
#include <string>

#include "aeroplan/fgamma_table.h"
#include "aeroplan/rng.h"

namespace aeroplan {

enum class BoundMode { kLower, kApprox1, kApprox2, kMonteCarlo };

std::string BoundModeName(BoundMode mode);
BoundMode BoundModeFromName(const std::string& name);  // throws InputError

struct NeighborGain {
  double g = 0;
  double kappa = 1;
};

// Floor applied to the strongest neighbor gain when every neighbor gain is
// zero, so that weights stay finite.
constexpr double kNeighborGainFloor = 1e-30;

// log2(e)/kappa - log2(1 + 1/(2 kappa)).
double FadingPenalty(double kappa);

// sqrt(sum_j g_j^2 / kappa_j).
double InterferenceSpread(std::span<const NeighborGain> neighbors);

// max_j g_j, floored; sets *degenerate when the floor was used.
double StrongestNeighbor(std::span<const NeighborGain> neighbors, bool* degenerate = nullptr);

// Effective SNR per watt of leakage: g_tx / ((max_j g_j + alpha*spread) noise).
double LeakageSnrPerWatt(double g_tx, std::span<const NeighborGain> neighbors,
                         double noise_w, double alpha, bool* degenerate = nullptr);

// log2(1 + theta * snr) - FadingPenalty(kappa_tx), clamped at 0. alpha = 1
// gives a guaranteed lower bound on the expected capacity; alpha = 1/2 gives
// the tighter approximation.
double CapacityLowerBound(double theta, double g_tx, double kappa_tx,
                          std::span<const NeighborGain> neighbors, double noise_w,
                          double alpha, bool* degenerate = nullptr);

// Table-based approximation f(gamma; kappa_tx) with the alpha = 1/2 SNR.
double CapacityApproxII(double theta, double g_tx, double kappa_tx,
                        std::span<const NeighborGain> neighbors, double noise_w,
                        const FGammaTable& table, bool* out_of_range = nullptr);

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
};

// Sample mean of log2(1 + theta h_tx / (max_j h_j noise)) over joint Gamma
// draws of the transmit link and every neighbor link.
MonteCarloEstimate ExpectedCapacityMc(double theta, double g_tx, double kappa_tx,
                                      std::span<const NeighborGain> neighbors,
                                      double noise_w, int n_samples, Rng& rng);

}  // namespace aeroplan

#endif
