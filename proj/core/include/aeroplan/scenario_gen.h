#ifndef AEROPLAN_SCENARIO_GEN_H
#define AEROPLAN_SCENARIO_GEN_H

#include <cstdint>

#include "aeroplan/scenario.h"

namespace aeroplan {

// Corridor layout: sources in the first strip, protected neighbors in the
// central strip, destinations in the last strip. Relays fly above.
struct ScenarioKnobs {
  int num_nodes = 7;  // per flow: source + relays + destination
  int num_neighbors = 3;
  double horizon_s = 10.0;
  double size_bits = 50e6;
  int num_commodities = 1;
  bool segments = false;  // commodities share one pair and split size_bits
  double speed_min = 5.0;
  double speed_max = 20.0;
  double hover_max_s = 2.0;
  double corridor_length_m = 1000.0;
  double corridor_width_m = 600.0;
  double strip_width_m = 200.0;
  double cargo_horizontal_alt_m = 50.0;
  double cargo_vertical_alt_m = 45.0;
  double patrol_alt_m = 50.0;
  double neighbor_alt_m = 5.0;
  ChannelParams channel;

  void Validate() const;  // throws InputError
};

// Relays 0..3 are cargo UAVs alternating horizontal (along the corridor) and
// vertical (across it) shuttles, relay 4 is the circular patrol UAV, further
// relays are cargo UAVs again. Ids: sources, relays, destinations,
// neighbors, starting at 1.
Scenario GenerateScenario(uint64_t seed, const ScenarioKnobs& knobs);

}  // namespace aeroplan

#endif
