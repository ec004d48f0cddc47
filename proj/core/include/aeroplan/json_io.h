#ifndef AEROPLAN_JSON_IO_H
#define AEROPLAN_JSON_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "aeroplan/multiflow.h"
#include "aeroplan/network.h"
#include "aeroplan/planner.h"
#include "aeroplan/replay.h"
#include "aeroplan/scenario.h"
#include "aeroplan/space_time_graph.h"

namespace aeroplan {

// Infinite leakage levels serialize as null.
nlohmann::json NumberOrNull(double v);

nlohmann::json ScenarioToJson(const Scenario& s);
Scenario ScenarioFromJson(const nlohmann::json& j);  // throws InputError

// Plans refer to nodes by id.
nlohmann::json PlanToJson(const Network& net, const Plan& plan);
Plan PlanFromJson(const Network& net, const nlohmann::json& j);  // throws InputError

nlohmann::json MultiPlanToJson(const Network& net, const MultiPlan& plan);
nlohmann::json GraphToJson(const Network& net, const SpaceTimeGraph& g);
nlohmann::json ReplayToJson(const ReplayReport& r);

nlohmann::json ReadJsonFile(const std::string& path);  // throws InputError

}  // namespace aeroplan

#endif
