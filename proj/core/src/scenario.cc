#include "aeroplan/scenario.h"

#include <cmath>
#include <set>

#include "aeroplan/errors.h"

namespace aeroplan {

std::string RoleName(NodeRole role) {
  switch (role) {
    case NodeRole::kSource:
      return "source";
    case NodeRole::kCargoUav:
      return "cargo-uav";
    case NodeRole::kPatrolUav:
      return "patrol-uav";
    case NodeRole::kDestination:
      return "destination";
    case NodeRole::kNeighbor:
      return "neighbor";
  }
  return "unknown";
}

NodeRole RoleFromName(const std::string& name) {
  for (NodeRole r : {NodeRole::kSource, NodeRole::kCargoUav, NodeRole::kPatrolUav,
                     NodeRole::kDestination, NodeRole::kNeighbor}) {
    if (RoleName(r) == name) return r;
  }
  throw InputError("unknown node role '" + name + "'");
}

bool IsAerial(NodeRole role) {
  return role == NodeRole::kCargoUav || role == NodeRole::kPatrolUav;
}

int Scenario::NodeIndex(int id) const {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return static_cast<int>(i);
  }
  throw InputError("unknown node id " + std::to_string(id));
}

std::vector<int> Scenario::NetworkNodes() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].role != NodeRole::kNeighbor) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> Scenario::NeighborNodes() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].role == NodeRole::kNeighbor) out.push_back(static_cast<int>(i));
  }
  return out;
}

void Scenario::Validate() const {
  if (!(horizon_s > 0) || !std::isfinite(horizon_s)) {
    throw InputError("scenario: horizon_s must be > 0");
  }
  channel.Validate();
  std::set<int> ids;
  for (const Node& n : nodes) {
    if (!ids.insert(n.id).second) {
      throw InputError("scenario: duplicate node id " + std::to_string(n.id));
    }
    n.trajectory.Validate();
  }
  if (NeighborNodes().empty()) throw InputError("scenario: at least one neighbor is required");
  if (NetworkNodes().size() < 2) throw InputError("scenario: at least two network nodes are required");
  if (commodities.empty()) throw InputError("scenario: task has no commodities");
  for (const Commodity& c : commodities) {
    const Node& s = nodes[NodeIndex(c.src)];
    const Node& d = nodes[NodeIndex(c.dst)];
    if (c.src == c.dst) throw InputError("scenario: commodity src == dst");
    if (s.role == NodeRole::kNeighbor || d.role == NodeRole::kNeighbor) {
      throw InputError("scenario: commodity endpoints must be network nodes");
    }
    if (!(c.size_bits >= 0) || !std::isfinite(c.size_bits)) {
      throw InputError("scenario: commodity size must be finite and >= 0");
    }
  }
}

}  // namespace aeroplan
