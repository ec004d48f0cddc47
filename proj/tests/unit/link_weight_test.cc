#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "aeroplan/link_weight.h"
#include "aeroplan/radio_map.h"
#include "aeroplan/rng.h"
#include "fixtures.h"

namespace aeroplan {
namespace {

using test::FixedScenario;

// tx at the origin, rx and the only neighbor both 100 m away, so
// g_tx / (g_j noise) = 1 / noise.
Scenario UnitSnrScenario(double noise, double horizon = 4) {
  Scenario s = FixedScenario({{1, NodeRole::kSource, {0, 0, 0}},
                              {2, NodeRole::kDestination, {100, 0, 0}},
                              {3, NodeRole::kNeighbor, {0, 100, 0}}},
                             horizon, 10e6);
  s.channel.noise_power_w = noise;
  return s;
}

TEST(Upsilon, ZeroLeakageAndEmptyWindow) {
  Network net(UnitSnrScenario(1.0), test::Options());
  EXPECT_EQ(Upsilon(net, {0, 1, 0, 1, 1e6}, 0.0), 0.0);
  EXPECT_EQ(Upsilon(net, {0, 1, 0.5, 0.5, 1e6}, 1.0), 0.0);
  EXPECT_EQ(Upsilon(net, {0, 0, 0, 1, 1e6}, 1.0), 0.0);
}

TEST(Upsilon, ConstantChannelClosedForm) {
  for (BoundMode mode : {BoundMode::kLower, BoundMode::kApprox1, BoundMode::kApprox2}) {
    Network net(UnitSnrScenario(0.25), test::Options(mode));
    for (double tau : {0.3, 1.0, 2.37}) {
      double theta = 0.8;
      double expected = tau * 10e6 * std::log2(1 + theta / 0.25);
      // The table path carries the grid interpolation error.
      double tol = mode == BoundMode::kApprox2 ? 2e-3 : 1e-5;
      EXPECT_NEAR(Upsilon(net, {0, 1, 0.11, 0.11 + tau, 1e6}, theta) / expected, 1.0, tol)
          << BoundModeName(mode) << " " << tau;
    }
  }
}

TEST(Upsilon, PartialCellsIntegrateExactly) {
  Network net(UnitSnrScenario(1.0), test::Options(BoundMode::kApprox1));
  double whole = Upsilon(net, {0, 1, 0.0, 1.0, 1e6}, 1.0);
  double split = Upsilon(net, {0, 1, 0.0, 0.337, 1e6}, 1.0) +
                 Upsilon(net, {0, 1, 0.337, 1.0, 1e6}, 1.0);
  EXPECT_NEAR(split / whole, 1.0, 1e-12);
}

TEST(SolveP1, ZeroSizeAndVirtualHop) {
  Network net(UnitSnrScenario(1.0), test::Options());
  LinkWeight w = SolveP1(net, {0, 1, 0, 1, 0.0});
  EXPECT_EQ(w.theta, 0.0);
  EXPECT_TRUE(w.feasible);
  LinkWeight v = SolveP1(net, {1, 1, 0, 1, 1e9});
  EXPECT_EQ(v.theta, 0.0);
  EXPECT_TRUE(v.feasible);
}

TEST(SolveP1, InvertsClosedFormToOneWatt) {
  for (BoundMode mode : {BoundMode::kApprox1, BoundMode::kApprox2, BoundMode::kLower}) {
    Network net(UnitSnrScenario(1.0), test::Options(mode));
    LinkWeight w = SolveP1(net, {0, 1, 1.0, 2.0, 10e6});
    EXPECT_TRUE(w.feasible);
    EXPECT_NEAR(w.theta, 1.0, 1e-3) << BoundModeName(mode);
    EXPECT_EQ(w.mode, mode);
  }
}

TEST(SolveP1, ZeroLengthWindowIsInfeasible) {
  Network net(UnitSnrScenario(1.0), test::Options());
  LinkWeight w = SolveP1(net, {0, 1, 2.0, 2.0, 1e6});
  EXPECT_FALSE(w.feasible);
  EXPECT_EQ(w.theta, net.options().theta_cap_w);
}

TEST(SolveP1, CapReportsInfeasible) {
  PlannerOptions o = test::Options();
  o.theta_cap_w = 1e-3;
  Network net(UnitSnrScenario(1.0), o);
  LinkWeight w = SolveP1(net, {0, 1, 0.0, 1.0, 10e6});
  EXPECT_FALSE(w.feasible);
  EXPECT_EQ(w.theta, 1e-3);
}

TEST(SolveP1, HitsBitTolerance) {
  Network net(test::CorridorScenario(3), test::Options());
  for (int rx = 1; rx < 4; ++rx) {
    HopSpec hop{0, rx, 0.7, 4.2, 30e6};
    LinkWeight w = SolveP1(net, hop);
    ASSERT_TRUE(w.feasible);
    EXPECT_NEAR(Upsilon(net, hop, w.theta), hop.size_bits, BitTolerance(hop.size_bits));
  }
}

TEST(SolveP1, IndependentOfBracketSeed) {
  Network net(test::CorridorScenario(5), test::Options());
  HopSpec hop{0, 2, 1.0, 6.0, 40e6};
  double auto_seed = SolveP1(net, hop).theta;
  for (double guess : {1e-25, 1e-12, 1e-3, 1e3}) {
    double t = SolveP1(net, hop, guess).theta;
    EXPECT_NEAR(t / auto_seed, 1.0, 1e-4) << guess;
  }
}

TEST(SolveP1, MonteCarloThroughputMatchesSize) {
  // Rayleigh and moderately faded links, MC-mode weights, and an independent
  // Monte Carlo evaluation of the delivered bits at the solved level.
  Scenario s = FixedScenario({{1, NodeRole::kSource, {0, 0, 0}},
                              {2, NodeRole::kDestination, {120, 0, 0}},
                              {3, NodeRole::kNeighbor, {0, 150, 0}},
                              {4, NodeRole::kNeighbor, {-90, -60, 0}}},
                             2, 5e6, 1.0);
  s.channel.kappa_air_ground = {1.0, 6.0};
  s.channel.noise_power_w = test::ReferenceLosGain(120) / test::ReferenceLosGain(150);
  PlannerOptions o = test::Options(BoundMode::kMonteCarlo);
  o.mc_samples = 10000;
  Network net(s, o);
  HopSpec hop{0, 1, 0.0, 1.0, 5e6};
  LinkWeight w = SolveP1(net, hop);
  ASSERT_TRUE(w.feasible);

  const RadioMap& map = net.radio_map();
  const LinkStats& link = map.Link(0, 1);
  const LinkStats& n1 = map.Link(0, 2);
  const LinkStats& n2 = map.Link(0, 3);
  Rng rng = MakeStream(41, StreamPurpose::kTest);
  const int per_cell = 5000;
  double bits = 0;
  for (int c = 0; c < 20; ++c) {
    double t = (c + 0.5) * net.dt();
    double sum = 0;
    for (int i = 0; i < per_cell; ++i) {
      double h = SampleChannel(link, t, rng);
      double hj = std::max(SampleChannel(n1, t, rng), SampleChannel(n2, t, rng));
      sum += std::log2(1 + w.theta * h / (hj * net.noise()));
    }
    bits += net.bandwidth() * net.dt() * sum / per_cell;
  }
  EXPECT_NEAR(bits / hop.size_bits, 1.0, 0.02);
}

TEST(SolveP1, TighterBoundNeedsLessLeakage) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Scenario s = test::CorridorScenario(seed);
    Network lower(s, test::Options(BoundMode::kLower));
    Network a1(s, test::Options(BoundMode::kApprox1));
    Network a2(s, test::Options(BoundMode::kApprox2));
    Rng rng = MakeStream(seed, StreamPurpose::kTest, 42);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 5; ++trial) {
      int tx = static_cast<int>(u(rng) * lower.num_nodes());
      int rx = (tx + 1 + static_cast<int>(u(rng) * (lower.num_nodes() - 1))) % lower.num_nodes();
      double t0 = 8 * u(rng);
      HopSpec hop{tx, rx, t0, t0 + 0.2 + 2 * u(rng), 1e6 + 50e6 * u(rng)};
      LinkWeight wl = SolveP1(lower, hop);
      LinkWeight w1 = SolveP1(a1, hop);
      LinkWeight w2 = SolveP1(a2, hop);
      if (!wl.feasible) continue;
      EXPECT_LE(w2.theta, w1.theta * (1 + 2e-3)) << seed << "/" << trial;  // table interpolation
      EXPECT_LE(w1.theta, wl.theta * (1 + 1e-5)) << seed << "/" << trial;
    }
  }
}

class HopProperties : public ::testing::TestWithParam<int> {};

TEST_P(HopProperties, MonotoneInLeakageAndWindow) {
  int instance = GetParam();
  Network net(test::CorridorScenario(100 + instance / 10), test::Options());
  Rng rng = MakeStream(instance, StreamPurpose::kTest, 43);
  std::uniform_real_distribution<double> u(0, 1);
  int tx = static_cast<int>(u(rng) * net.num_nodes());
  int rx = (tx + 1 + static_cast<int>(u(rng) * (net.num_nodes() - 1))) % net.num_nodes();
  double a = 6 * u(rng);
  double b = a + 0.5 + 3 * u(rng);
  double size = 1e6 + 40e6 * u(rng);

  double theta = std::pow(10.0, -20 + 10 * u(rng));
  double ups = Upsilon(net, {tx, rx, a, b, size}, theta);
  if (ups > 0) EXPECT_GT(Upsilon(net, {tx, rx, a, b, size}, 2 * theta), ups);

  // Longer window from the same start needs less leakage; a later start
  // with the same end needs more. The solver resolves this whenever the
  // extra span carries more than its tolerance band of bits.
  double t1 = b;
  double t2 = b + 0.3 + u(rng);
  double tol = BitTolerance(size);
  LinkWeight w1 = SolveP1(net, {tx, rx, a, t1, size});
  LinkWeight w2 = SolveP1(net, {tx, rx, a, t2, size});
  if (w1.feasible && w2.feasible) {
    double extra = Upsilon(net, {tx, rx, t1, t2, size}, w1.theta);
    if (extra > 0) {
      EXPECT_GT(Upsilon(net, {tx, rx, a, t2, size}, w1.theta),
                Upsilon(net, {tx, rx, a, t1, size}, w1.theta));
    }
    if (extra > 2 * tol) EXPECT_GT(w1.theta, w2.theta);
  }
  double s1 = a;
  double s2 = a + 0.2 + 0.5 * u(rng);
  LinkWeight v1 = SolveP1(net, {tx, rx, s1, t2, size});
  LinkWeight v2 = SolveP1(net, {tx, rx, s2, t2, size});
  if (v1.feasible && v2.feasible) {
    double dropped = Upsilon(net, {tx, rx, s1, s2, size}, v2.theta);
    if (dropped > 2 * tol) EXPECT_LT(v1.theta, v2.theta);
  }
}

INSTANTIATE_TEST_SUITE_P(RandomInstances, HopProperties, ::testing::Range(0, 100));

TEST(PowerPolicy, PinsStrongestInterference) {
  EXPECT_EQ(PowerPolicy(0.0, std::vector<double>{0.5}), 0.0);
  std::vector<double> g{0.5, 0.25};
  double p = PowerPolicy(2.0, g);
  EXPECT_DOUBLE_EQ(p, 4.0);
  EXPECT_DOUBLE_EQ(p * 0.5, 2.0);
  EXPECT_EQ(PowerPolicy(2.0, std::vector<double>{0.0, 0.0}), 1e3);
  EXPECT_EQ(PowerPolicy(2.0, std::vector<double>{0.0}, 7.0), 7.0);
}

}  // namespace
}  // namespace aeroplan
