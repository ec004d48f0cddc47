#include "aeroplan/capacity.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "aeroplan/errors.h"

namespace aeroplan {

std::string BoundModeName(BoundMode mode) {
  switch (mode) {
    case BoundMode::kLower:
      return "lower";
    case BoundMode::kApprox1:
      return "approx1";
    case BoundMode::kApprox2:
      return "approx2";
    case BoundMode::kMonteCarlo:
      return "mc";
  }
  return "unknown";
}

BoundMode BoundModeFromName(const std::string& name) {
  for (BoundMode m : {BoundMode::kLower, BoundMode::kApprox1, BoundMode::kApprox2,
                      BoundMode::kMonteCarlo}) {
    if (BoundModeName(m) == name) return m;
  }
  throw InputError("unknown bound mode '" + name + "'");
}

double FadingPenalty(double kappa) {
  return std::numbers::log2e / kappa - std::log2(1.0 + 0.5 / kappa);
}

double InterferenceSpread(std::span<const NeighborGain> neighbors) {
  double s = 0;
  for (const NeighborGain& n : neighbors) s += n.g * n.g / n.kappa;
  return std::sqrt(s);
}

double StrongestNeighbor(std::span<const NeighborGain> neighbors, bool* degenerate) {
  double m = 0;
  for (const NeighborGain& n : neighbors) m = std::max(m, n.g);
  if (m <= 0) {
    if (degenerate) *degenerate = true;
    return kNeighborGainFloor;
  }
  return m;
}

double LeakageSnrPerWatt(double g_tx, std::span<const NeighborGain> neighbors,
                         double noise_w, double alpha, bool* degenerate) {
  double denom = StrongestNeighbor(neighbors, degenerate) + alpha * InterferenceSpread(neighbors);
  return g_tx / (denom * noise_w);
}

double CapacityLowerBound(double theta, double g_tx, double kappa_tx,
                          std::span<const NeighborGain> neighbors, double noise_w,
                          double alpha, bool* degenerate) {
  if (theta <= 0 || g_tx <= 0) return 0;
  double snr = LeakageSnrPerWatt(g_tx, neighbors, noise_w, alpha, degenerate);
  return std::max(0.0, std::log2(1.0 + theta * snr) - FadingPenalty(kappa_tx));
}

double CapacityApproxII(double theta, double g_tx, double kappa_tx,
                        std::span<const NeighborGain> neighbors, double noise_w,
                        const FGammaTable& table, bool* out_of_range) {
  if (theta <= 0 || g_tx <= 0) return 0;
  double gamma = theta * LeakageSnrPerWatt(g_tx, neighbors, noise_w, 0.5);
  return table.Eval(gamma, kappa_tx, out_of_range);
}

MonteCarloEstimate ExpectedCapacityMc(double theta, double g_tx, double kappa_tx,
                                      std::span<const NeighborGain> neighbors,
                                      double noise_w, int n_samples, Rng& rng) {
  if (n_samples < 1) throw InputError("monte carlo: n_samples must be >= 1");
  if (theta <= 0 || g_tx <= 0) return {};
  UnitGamma tx(kappa_tx);
  std::vector<UnitGamma> nb;
  for (const NeighborGain& n : neighbors) nb.emplace_back(n.kappa);
  double sum = 0;
  double sum_sq = 0;
  for (int s = 0; s < n_samples; ++s) {
    double h_tx = g_tx * tx(rng);
    double h_max = 0;
    for (size_t j = 0; j < nb.size(); ++j) h_max = std::max(h_max, neighbors[j].g * nb[j](rng));
    if (h_max <= 0) h_max = kNeighborGainFloor;
    double c = std::log2(1.0 + theta * h_tx / (h_max * noise_w));
    sum += c;
    sum_sq += c * c;
  }
  double mean = sum / n_samples;
  double var = std::max(0.0, sum_sq / n_samples - mean * mean);
  return {mean, std::sqrt(var / n_samples)};
}

}  // namespace aeroplan
