#include "aeroplan/network.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "aeroplan/errors.h"
#include "aeroplan/rng.h"

namespace aeroplan {

double LinkProfile::Rate(double theta, size_t cell) const {
  if (theta <= 0) return 0;
  switch (mode_) {
    case BoundMode::kLower:
    case BoundMode::kApprox1:
      return std::max(0.0, std::log2(1.0 + theta * snr_[cell]) - penalty_[cell]);
    case BoundMode::kApprox2:
      return rows_[row_of_cell_[cell]].Eval(theta * snr_[cell]);
    case BoundMode::kMonteCarlo: {
      const double* r = &mc_ratio_[cell * mc_n_];
      double sum = 0;
      for (int s = 0; s < mc_n_; ++s) sum += std::log2(1.0 + theta * r[s]);
      return sum / mc_n_;
    }
  }
  return 0;
}

Network::Network(Scenario scenario, PlannerOptions options)
    : scenario_(std::move(scenario)), options_(options) {
  scenario_.Validate();
  if (!(options_.dt_s > 0)) throw InputError("dt must be > 0");
  if (!(options_.theta_rel_tol > 0)) throw InputError("tolerance must be > 0");
  if (options_.mc_samples < 1) throw InputError("mc_samples must be >= 1");
  table_ = options_.table != nullptr ? options_.table : &FGammaTable::Default();
  network_ = scenario_.NetworkNodes();
  neighbors_ = scenario_.NeighborNodes();
  radio_map_ = std::make_unique<RadioMap>(
      scenario_, TimeGrid::Covering(horizon_cap(), options_.dt_s));
  profiles_.reset(new Slot[network_.size() * network_.size()]);
}

int Network::IndexOfId(int id) const {
  for (size_t v = 0; v < network_.size(); ++v) {
    if (scenario_.nodes[network_[v]].id == id) return static_cast<int>(v);
  }
  throw InputError("node id " + std::to_string(id) + " is not a network node");
}

bool Network::IsAerial(int v) const { return aeroplan::IsAerial(scenario_.nodes[network_[v]].role); }

const LinkProfile& Network::Profile(int tx, int rx) const {
  Slot& slot = profiles_[tx * network_.size() + rx];
  std::call_once(slot.once, [&] { slot.profile = BuildProfile(tx, rx); });
  return slot.profile;
}

LinkProfile Network::BuildProfile(int tx, int rx) const {
  if (tx == rx) throw InputError("capacity profile requested for a self link");
  int a = network_[tx];
  int b = network_[rx];
  const LinkStats& link = radio_map_->Link(a, b);
  std::vector<const LinkStats*> nb;
  for (int j : neighbors_) nb.push_back(&radio_map_->Link(a, j));

  LinkProfile p;
  p.mode_ = options_.bound;
  double alpha = options_.bound == BoundMode::kLower ? 1.0 : 0.5;
  size_t n = n_cells();
  p.snr_.resize(n);
  p.penalty_.resize(n);
  p.row_of_cell_.resize(n);
  std::map<double, unsigned> row_index;
  std::vector<NeighborGain> gains(nb.size());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < nb.size(); ++j) gains[j] = {nb[j]->g[i], nb[j]->kappa[i]};
    bool degenerate = false;
    p.snr_[i] = LeakageSnrPerWatt(link.g[i], gains, noise(), alpha, &degenerate);
    p.degenerate_ = p.degenerate_ || degenerate;
    double kappa = link.kappa[i];
    p.penalty_[i] = FadingPenalty(kappa);
    if (p.mode_ == BoundMode::kApprox2) {
      auto [it, inserted] = row_index.emplace(kappa, static_cast<unsigned>(p.rows_.size()));
      if (inserted) p.rows_.push_back(table_->RowFor(kappa));
      p.row_of_cell_[i] = it->second;
    }
  }

  if (p.mode_ == BoundMode::kMonteCarlo) {
    p.mc_n_ = options_.mc_samples;
    p.mc_ratio_.resize(n * p.mc_n_);
    Rng rng = MakeStream(scenario_.seed, StreamPurpose::kCapacitySamples, a, b);
    for (size_t i = 0; i < n; ++i) {
      UnitGamma tx_fade(link.kappa[i]);
      std::vector<UnitGamma> nb_fade;
      for (const LinkStats* s : nb) nb_fade.emplace_back(s->kappa[i]);
      for (int s = 0; s < p.mc_n_; ++s) {
        double h_tx = link.g[i] * tx_fade(rng);
        double h_max = 0;
        for (size_t j = 0; j < nb.size(); ++j) h_max = std::max(h_max, nb[j]->g[i] * nb_fade[j](rng));
        if (h_max <= 0) h_max = kNeighborGainFloor;
        p.mc_ratio_[i * p.mc_n_ + s] = h_tx / (h_max * noise());
      }
    }
  }
  return p;
}

}  // namespace aeroplan
