#ifndef AEROPLAN_NETWORK_H
#define AEROPLAN_NETWORK_H

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "aeroplan/capacity.h"
#include "aeroplan/fgamma_table.h"
#include "aeroplan/radio_map.h"
#include "aeroplan/scenario.h"

namespace aeroplan {

struct PlannerOptions {
  double dt_s = 0.05;
  BoundMode bound = BoundMode::kApprox2;
  double backtracking = 0.5;
  double theta_rel_tol = 1e-4;
  double theta_cap_w = 1e6;
  double horizon_cap_factor = 4.0;
  int max_outer_iterations = 50;
  double convergence_fraction = 1e-3;
  int mc_samples = 32;
  const FGammaTable* table = nullptr;  // null selects FGammaTable::Default()
};

// Per-cell capacity of one directed link as a function of leakage level,
// under the configured bound mode.
class LinkProfile {
 public:
  // bits/s/Hz in cell i at leakage theta (W).
  double Rate(double theta, size_t cell) const;

  // Deterministic SNR per watt of leakage in cell i (alpha = 1 for the lower
  // bound, 1/2 otherwise).
  double SnrPerWatt(size_t cell) const { return snr_[cell]; }

  // True when some cell had no neighbor with positive gain.
  bool degenerate() const { return degenerate_; }

 private:
  friend class Network;

  BoundMode mode_ = BoundMode::kApprox2;
  std::vector<double> snr_;
  std::vector<double> penalty_;
  std::vector<FGammaTable::Row> rows_;
  std::vector<unsigned> row_of_cell_;
  int mc_n_ = 0;
  std::vector<double> mc_ratio_;  // [cell * mc_n + s]
  bool degenerate_ = false;
};

// Planning view of a scenario: the network nodes (everything except
// neighbors) with a dense index 0..num_nodes()-1, the radio map, and lazily
// built capacity profiles for every ordered pair.
class Network {
 public:
  explicit Network(Scenario scenario, PlannerOptions options = {});

  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  const Scenario& scenario() const { return scenario_; }
  const PlannerOptions& options() const { return options_; }
  const RadioMap& radio_map() const { return *radio_map_; }
  const FGammaTable& table() const { return *table_; }

  double horizon() const { return scenario_.horizon_s; }
  double horizon_cap() const { return options_.horizon_cap_factor * scenario_.horizon_s; }
  double bandwidth() const { return scenario_.channel.bandwidth_hz; }
  double noise() const { return scenario_.channel.noise_power_w; }
  double dt() const { return options_.dt_s; }
  size_t n_cells() const { return radio_map_->grid().n_samples; }

  int num_nodes() const { return static_cast<int>(network_.size()); }
  int NodeId(int v) const { return scenario_.nodes[network_[v]].id; }
  int ScenarioIndex(int v) const { return network_[v]; }
  int IndexOfId(int id) const;  // throws InputError
  bool IsAerial(int v) const;
  const std::vector<int>& neighbors() const { return neighbors_; }

  const LinkProfile& Profile(int tx, int rx) const;

 private:
  struct Slot {
    std::once_flag once;
    LinkProfile profile;
  };

  LinkProfile BuildProfile(int tx, int rx) const;

  Scenario scenario_;
  PlannerOptions options_;
  const FGammaTable* table_;
  std::vector<int> network_;
  std::vector<int> neighbors_;
  std::unique_ptr<RadioMap> radio_map_;
  std::unique_ptr<Slot[]> profiles_;
};

}  // namespace aeroplan

#endif
