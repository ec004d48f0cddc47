#ifndef AEROPLAN_RADIO_MAP_H
#define AEROPLAN_RADIO_MAP_H

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "aeroplan/rng.h"
#include "aeroplan/scenario.h"

namespace aeroplan {

// Large-scale statistics of one link on a uniform grid. Sample i applies to
// the cell [i*dt, (i+1)*dt).
struct LinkStats {
  double dt = 0.05;
  std::vector<double> g;
  std::vector<double> kappa;

  size_t size() const { return g.size(); }
  size_t CellAt(double t) const;
  double GainAt(double t) const { return g[CellAt(t)]; }
  double KappaAt(double t) const { return kappa[CellAt(t)]; }
};

// Grid used when a scenario is sampled: covers [0, duration_s] with spacing
// dt_s.
struct TimeGrid {
  double dt_s = 0.05;
  size_t n_samples = 0;

  static TimeGrid Covering(double duration_s, double dt_s);
};

// Statistics for the link between scenario nodes `m` and `n` (indices into
// scenario.nodes). Links are reciprocal: (m, n) and (n, m) give the same
// result.
LinkStats EvalRadioMap(const Scenario& scenario, int m, int n, const TimeGrid& grid);

// g(t) * xi with xi ~ Gamma(kappa(t), 1/kappa(t)).
double SampleChannel(const LinkStats& stats, double t, Rng& rng);

// Lazily evaluated, thread-safe cache of every link's statistics.
class RadioMap {
 public:
  RadioMap(const Scenario& scenario, TimeGrid grid);

  const LinkStats& Link(int m, int n) const;
  const TimeGrid& grid() const { return grid_; }

 private:
  struct Slot {
    std::once_flag once;
    LinkStats stats;
  };

  const Scenario& scenario_;
  TimeGrid grid_;
  size_t n_nodes_;
  std::unique_ptr<Slot[]> slots_;
};

}  // namespace aeroplan

#endif
