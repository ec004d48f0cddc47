#ifndef AEROPLAN_SCENARIO_H
#define AEROPLAN_SCENARIO_H

#include <cstdint>
#include <string>
#include <vector>

#include "aeroplan/channel.h"
#include "aeroplan/trajectory.h"

namespace aeroplan {

enum class NodeRole { kSource, kCargoUav, kPatrolUav, kDestination, kNeighbor };

std::string RoleName(NodeRole role);
NodeRole RoleFromName(const std::string& name);  // throws InputError

bool IsAerial(NodeRole role);

struct Node {
  int id = 0;
  NodeRole role = NodeRole::kSource;
  Trajectory trajectory;
};

struct Commodity {
  int src = 0;
  int dst = 0;
  double size_bits = 0;
};

// Full planning input. Nodes that are not neighbors form the network the
// planner routes over; neighbors are the protected receivers.
struct Scenario {
  uint64_t seed = 0;
  double horizon_s = 10.0;
  ChannelParams channel;
  std::vector<Node> nodes;
  std::vector<Commodity> commodities;

  // Throws InputError.
  void Validate() const;

  int NodeIndex(int id) const;  // throws InputError if unknown
  std::vector<int> NetworkNodes() const;  // indices into `nodes`
  std::vector<int> NeighborNodes() const;
};

}  // namespace aeroplan

#endif
