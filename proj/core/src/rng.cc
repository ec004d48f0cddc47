#include "aeroplan/rng.h"

#include <algorithm>

namespace aeroplan {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng MakeStream(uint64_t seed, StreamPurpose purpose, uint64_t a, uint64_t b) {
  uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ static_cast<uint64_t>(purpose));
  h = SplitMix64(h ^ a);
  h = SplitMix64(h ^ (b * 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<uint32_t>(h), static_cast<uint32_t>(h >> 32)};
  return Rng(seq);
}

namespace {
constexpr double kMaxShape = 1e6;
}  // namespace

UnitGamma::UnitGamma(double kappa)
    : kappa_(std::min(kappa, kMaxShape)), dist_(kappa_, 1.0 / kappa_) {}

}  // namespace aeroplan
