#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "aeroplan/radio_map.h"
#include "aeroplan/rng.h"
#include "aeroplan/scenario_gen.h"
#include "fixtures.h"

namespace aeroplan {
namespace {

using test::FixedScenario;
using test::PlacedNode;

Scenario TwoNodes(Vec3 a, Vec3 b, double horizon = 10) {
  return FixedScenario({{1, NodeRole::kSource, a},
                        {2, NodeRole::kDestination, b},
                        {3, NodeRole::kNeighbor, {0, 500, 0}}},
                       horizon, 1e6);
}

TEST(PathLoss, LosGainAtHundredMetresMatchesFormula) {
  Scenario s = TwoNodes({0, 0, 0}, {100, 0, 0});
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(1, 0.05));
  double expected = std::pow(10.0, -(22.0 + 28.0 * 2.0 + 20.0 * std::log10(3e9)) / 10.0);
  for (double g : l.g) EXPECT_NEAR(g / expected, 1.0, 1e-12);
}

TEST(PathLoss, CoLocatedNodesUseOneMetreClamp) {
  Scenario s = TwoNodes({5, 5, 5}, {5, 5, 5});
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(1, 0.05));
  EXPECT_TRUE(std::isfinite(l.g[0]));
  EXPECT_NEAR(l.g[0] / test::ReferenceLosGain(1.0), 1.0, 1e-12);
}

TEST(PathLoss, ForcedNlosUsesNlosCoefficients) {
  Scenario s = TwoNodes({0, 0, 0}, {100, 0, 0});
  s.channel.los_mode = LosMode::kForceNlos;
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(1, 0.05));
  double expected = std::pow(10.0, -(22.7 + 36.7 * 2.0 + 26.0 * std::log10(3e9)) / 10.0);
  EXPECT_NEAR(l.g[0] / expected, 1.0, 1e-12);
}

TEST(LosProbability, NearVerticalLinkIsAlmostAlwaysLos) {
  LosProbabilityModel m;
  EXPECT_NEAR(m.Probability(90.0), 1.0 / (1.0 + 6.0 * std::exp(-0.15 * 84.0)), 1e-15);

  Scenario s = TwoNodes({0, 0, 0}, {0, 0, 100}, 2000);
  s.channel.los_mode = LosMode::kSampled;
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(2000, 1.0));
  double los = test::ReferenceLosGain(100.0);
  int hits = 0;
  for (double g : l.g) hits += std::abs(g / los - 1) < 1e-9;
  EXPECT_GE(hits, static_cast<int>(0.999 * l.size()));
}

TEST(LosProbability, SampledFrequencyMatchesModelAtLowElevation) {
  // 10 degrees elevation: P(LOS) = 1 / (1 + 6 e^{-0.6}).
  double h = 50.0;
  double d = h / std::tan(10.0 * std::acos(-1.0) / 180.0);
  Scenario s = TwoNodes({0, 0, 0}, {d, 0, h}, 20000);
  s.channel.los_mode = LosMode::kSampled;
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(20000, 1.0));
  double los = test::ReferenceLosGain(std::hypot(d, h));
  int hits = 0;
  for (double g : l.g) hits += std::abs(g / los - 1) < 1e-9;
  double p = 1.0 / (1.0 + 6.0 * std::exp(-0.15 * 4.0));
  double freq = static_cast<double>(hits) / l.size();
  double sigma = std::sqrt(p * (1 - p) / l.size());
  EXPECT_NEAR(freq, p, 4 * sigma);
}

TEST(LosProbability, AirToAirLinksStayLos) {
  Scenario s = FixedScenario({{1, NodeRole::kCargoUav, {0, 0, 50}},
                              {2, NodeRole::kPatrolUav, {800, 0, 50}},
                              {3, NodeRole::kNeighbor, {0, 500, 0}},
                              {4, NodeRole::kSource, {0, 0, 0}},
                              {5, NodeRole::kDestination, {5, 0, 0}}},
                             100, 1e6);
  s.channel.los_mode = LosMode::kSampled;
  LinkStats l = EvalRadioMap(s, 0, 1, TimeGrid::Covering(100, 1.0));
  for (double g : l.g) EXPECT_NEAR(g / test::ReferenceLosGain(800.0), 1.0, 1e-12);
}

TEST(SampleChannel, DeterministicLimitReturnsMean) {
  LinkStats l;
  l.g = {2e-9};
  l.kappa = {1e6};
  Rng rng = MakeStream(1, StreamPurpose::kTest);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) sum += SampleChannel(l, 0, rng);
  EXPECT_NEAR(sum / 10000 / 2e-9, 1.0, 0.01);
}

TEST(SampleChannel, UnitShapeIsExponential) {
  LinkStats l;
  l.g = {1.0};
  l.kappa = {1.0};
  Rng rng = MakeStream(2, StreamPurpose::kTest);
  const int n = 100000;
  std::vector<double> x(n);
  for (double& v : x) v = SampleChannel(l, 0, rng);
  std::sort(x.begin(), x.end());
  double ks = 0;
  for (int i = 0; i < n; ++i) {
    double cdf = 1 - std::exp(-x[i]);
    ks = std::max({ks, std::abs(cdf - static_cast<double>(i) / n),
                   std::abs(cdf - static_cast<double>(i + 1) / n)});
  }
  EXPECT_LT(ks, 0.02);
}

TEST(SampleChannel, ZeroGainGivesZero) {
  LinkStats l;
  l.g = {0.0};
  l.kappa = {3.0};
  Rng rng = MakeStream(3, StreamPurpose::kTest);
  EXPECT_EQ(SampleChannel(l, 0, rng), 0.0);
}

TEST(SampleChannel, MeanWithinTwoPercentForAnyShape) {
  Rng pick = MakeStream(4, StreamPurpose::kTest);
  for (int trial = 0; trial < 5; ++trial) {
    double kappa = std::uniform_real_distribution<double>(1, 60)(pick);
    LinkStats l;
    l.g = {3e-7};
    l.kappa = {kappa};
    Rng rng = MakeStream(5, StreamPurpose::kTest, trial);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) sum += SampleChannel(l, 0, rng);
    EXPECT_NEAR(sum / 100000 / 3e-7, 1.0, 0.02) << "kappa " << kappa;
  }
}

TEST(Shadowing, CorrelationAtFiveMetresIsInverseE) {
  // One node shuttles at 10 m/s past a static one; shadowing is the residual
  // after removing the deterministic path loss.
  Scenario s;
  s.seed = 11;
  s.horizon_s = 4000;
  s.channel.los_mode = LosMode::kForceLos;
  s.nodes = {{1, NodeRole::kSource, Trajectory::Static({0, 0, 0})},
             {2, NodeRole::kCargoUav,
              Trajectory::LinearShuttle({100, 0, 50}, {900, 0, 50}, 10.0, 0.0, 0.0)},
             {3, NodeRole::kNeighbor, Trajectory::Static({0, 300, 0})}};
  s.commodities = {{1, 2, 1e6}};
  TimeGrid grid = TimeGrid::Covering(4000, 0.05);
  LinkStats l = EvalRadioMap(s, 0, 1, grid);
  std::vector<double> x(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    Vec3 p = s.nodes[1].trajectory.PositionAt(i * grid.dt_s);
    double pl = 22.0 + 28.0 * std::log10(Norm(p)) + 20.0 * std::log10(3e9);
    x[i] = -10.0 * std::log10(l.g[i]) - pl;
  }
  size_t lag = 10;  // 10 samples * 0.05 s * 10 m/s = 5 m
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  double var = 0;
  double cov = 0;
  for (size_t i = 0; i < x.size(); ++i) var += (x[i] - mean) * (x[i] - mean);
  for (size_t i = 0; i + lag < x.size(); ++i) cov += (x[i] - mean) * (x[i + lag] - mean);
  var /= x.size();
  cov /= x.size() - lag;
  EXPECT_NEAR(var, 8.0, 1.0);
  EXPECT_NEAR(cov / var, std::exp(-1.0), 0.1);
}

TEST(RadioMap, KappaDrawnFromRoleInterval) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Scenario s = GenerateScenario(seed, ScenarioKnobs{});
    for (int m = 0; m < static_cast<int>(s.nodes.size()); ++m) {
      for (int n = m + 1; n < static_cast<int>(s.nodes.size()); ++n) {
        LinkStats l = EvalRadioMap(s, m, n, TimeGrid::Covering(1, 0.5));
        bool air = IsAerial(s.nodes[m].role) && IsAerial(s.nodes[n].role);
        double lo = air ? 30 : 1;
        double hi = air ? 60 : 30;
        for (double k : l.kappa) {
          EXPECT_GE(k, lo);
          EXPECT_LE(k, hi);
          EXPECT_EQ(k, l.kappa[0]);
        }
      }
    }
  }
}

TEST(RadioMap, LinksAreReciprocalAndDeterministic) {
  Scenario s = GenerateScenario(7, ScenarioKnobs{});
  TimeGrid grid = TimeGrid::Covering(10, 0.05);
  LinkStats ab = EvalRadioMap(s, 1, 4, grid);
  LinkStats ba = EvalRadioMap(s, 4, 1, grid);
  EXPECT_EQ(ab.g, ba.g);
  EXPECT_EQ(ab.kappa, ba.kappa);
  RadioMap map(s, grid);
  EXPECT_EQ(map.Link(4, 1).g, ab.g);
  EXPECT_EQ(map.Link(1, 4).g, ab.g);
}

TEST(RadioMap, GridCoversDuration) {
  TimeGrid g = TimeGrid::Covering(10, 0.05);
  EXPECT_EQ(g.n_samples, 201u);
  LinkStats l;
  l.dt = 0.05;
  l.g.assign(201, 1.0);
  EXPECT_EQ(l.CellAt(0), 0u);
  EXPECT_EQ(l.CellAt(0.0499), 0u);
  EXPECT_EQ(l.CellAt(0.05), 1u);
  EXPECT_EQ(l.CellAt(100), 200u);
}

}  // namespace
}  // namespace aeroplan
