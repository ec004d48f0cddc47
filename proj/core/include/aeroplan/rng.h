#ifndef AEROPLAN_RNG_H
#define AEROPLAN_RNG_H

#include <cstdint>
#include <random>

namespace aeroplan {

using Rng = std::mt19937_64;

// Stream purposes. Each (seed, purpose, a, b) tuple gets an independent
// generator, so evaluation order never changes the numbers drawn.
enum class StreamPurpose : uint64_t {
  kScenario = 1,
  kKappa = 2,
  kShadowing = 3,
  kLosState = 4,
  kCapacitySamples = 5,
  kReplay = 6,
  kAllocationInit = 7,
  kSweep = 8,
  kTest = 99,
};

uint64_t SplitMix64(uint64_t x);

Rng MakeStream(uint64_t seed, StreamPurpose purpose, uint64_t a = 0,
               uint64_t b = 0);

// Gamma(kappa, 1/kappa): unit-mean fading multiplier. Shapes above 1e6 are
// treated as 1e6.
class UnitGamma {
 public:
  explicit UnitGamma(double kappa);
  double operator()(Rng& rng) { return dist_(rng); }
  double kappa() const { return kappa_; }

 private:
  double kappa_;
  std::gamma_distribution<double> dist_;
};

}  // namespace aeroplan

#endif
