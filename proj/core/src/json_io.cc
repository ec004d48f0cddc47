#include "aeroplan/json_io.h"

#include <cmath>
#include <fstream>

#include "aeroplan/errors.h"
#include "aeroplan/units.h"

namespace aeroplan {

using nlohmann::json;

namespace {

json VecToJson(Vec3 v) { return json::array({v.x, v.y, v.z}); }

Vec3 VecFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("expected [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json TrajectoryToJson(const Trajectory& t) {
  switch (t.kind) {
    case TrajectoryKind::kStatic:
      return {{"kind", "static"}, {"position", VecToJson(t.a)}};
    case TrajectoryKind::kLinearShuttle:
      return {{"kind", "linear-shuttle"}, {"from", VecToJson(t.a)}, {"to", VecToJson(t.b)},
              {"speed", t.speed}, {"hover_time", t.hover_time}, {"start_offset", t.start_offset}};
    case TrajectoryKind::kCircular:
      return {{"kind", "circular"}, {"center", VecToJson(t.a)}, {"radius", t.radius},
              {"speed", t.speed}, {"start_offset", t.start_offset}};
  }
  return {};
}

Trajectory TrajectoryFromJson(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "static") return Trajectory::Static(VecFromJson(j.at("position")));
  if (kind == "linear-shuttle") {
    return Trajectory::LinearShuttle(VecFromJson(j.at("from")), VecFromJson(j.at("to")),
                                     j.at("speed").get<double>(), j.value("hover_time", 0.0),
                                     j.value("start_offset", 0.0));
  }
  if (kind == "circular") {
    return Trajectory::Circular(VecFromJson(j.at("center")), j.at("radius").get<double>(),
                                j.at("speed").get<double>(), j.value("start_offset", 0.0));
  }
  throw InputError("unknown trajectory kind '" + kind + "'");
}

std::string LosModeName(LosMode m) {
  switch (m) {
    case LosMode::kSampled:
      return "sampled";
    case LosMode::kForceLos:
      return "force_los";
    case LosMode::kForceNlos:
      return "force_nlos";
  }
  return "sampled";
}

LosMode LosModeFromName(const std::string& s) {
  if (s == "sampled") return LosMode::kSampled;
  if (s == "force_los") return LosMode::kForceLos;
  if (s == "force_nlos") return LosMode::kForceNlos;
  throw InputError("unknown los_mode '" + s + "'");
}

json PathLossToJson(const PathLossModel& p) { return json::array({p.a, p.b, p.c}); }

PathLossModel PathLossFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("path loss must be [a, b, c]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json IntervalToJson(Interval i) { return json::array({i.lo, i.hi}); }

Interval IntervalFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("interval must be [lo, hi]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json ChannelToJson(const ChannelParams& c) {
  return {{"carrier_freq_hz", c.carrier_freq_hz},
          {"bandwidth_hz", c.bandwidth_hz},
          {"noise_power_w", c.noise_power_w},
          {"pathloss_los", PathLossToJson(c.pathloss_los)},
          {"pathloss_nlos", PathLossToJson(c.pathloss_nlos)},
          {"los_prob", {{"scale", c.los_prob.scale}, {"rate", c.los_prob.rate},
                        {"offset_deg", c.los_prob.offset_deg}}},
          {"shadow", {{"mean_db", c.shadow.mean_db}, {"variance_db", c.shadow.variance_db},
                      {"corr_distance_m", c.shadow.corr_distance_m}}},
          {"kappa_air_ground", IntervalToJson(c.kappa_air_ground)},
          {"kappa_air_air", IntervalToJson(c.kappa_air_air)},
          {"los_mode", LosModeName(c.los_mode)},
          {"los_segment_s", c.los_segment_s}};
}

ChannelParams ChannelFromJson(const json& j) {
  ChannelParams c;
  c.carrier_freq_hz = j.value("carrier_freq_hz", c.carrier_freq_hz);
  c.bandwidth_hz = j.value("bandwidth_hz", c.bandwidth_hz);
  c.noise_power_w = j.value("noise_power_w", c.noise_power_w);
  if (j.contains("pathloss_los")) c.pathloss_los = PathLossFromJson(j["pathloss_los"]);
  if (j.contains("pathloss_nlos")) c.pathloss_nlos = PathLossFromJson(j["pathloss_nlos"]);
  if (j.contains("los_prob")) {
    const json& l = j["los_prob"];
    c.los_prob.scale = l.value("scale", c.los_prob.scale);
    c.los_prob.rate = l.value("rate", c.los_prob.rate);
    c.los_prob.offset_deg = l.value("offset_deg", c.los_prob.offset_deg);
  }
  if (j.contains("shadow")) {
    const json& s = j["shadow"];
    c.shadow.mean_db = s.value("mean_db", c.shadow.mean_db);
    c.shadow.variance_db = s.value("variance_db", c.shadow.variance_db);
    c.shadow.corr_distance_m = s.value("corr_distance_m", c.shadow.corr_distance_m);
  }
  if (j.contains("kappa_air_ground")) c.kappa_air_ground = IntervalFromJson(j["kappa_air_ground"]);
  if (j.contains("kappa_air_air")) c.kappa_air_air = IntervalFromJson(j["kappa_air_air"]);
  if (j.contains("los_mode")) c.los_mode = LosModeFromName(j["los_mode"].get<std::string>());
  c.los_segment_s = j.value("los_segment_s", c.los_segment_s);
  return c;
}

json IdsOf(const Network& net, const Route& r) {
  json a = json::array();
  for (int v : r.nodes) a.push_back(net.NodeId(v));
  return a;
}

json NumbersOrNull(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(NumberOrNull(x));
  return a;
}

json DbmOrNull(double w) { return std::isfinite(w) ? json(WattsToDbm(w)) : json(nullptr); }

}  // namespace

json NumberOrNull(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json ScenarioToJson(const Scenario& s) {
  json nodes = json::array();
  for (const Node& n : s.nodes) {
    nodes.push_back({{"id", n.id}, {"role", RoleName(n.role)},
                     {"trajectory", TrajectoryToJson(n.trajectory)}});
  }
  json commodities = json::array();
  for (const Commodity& c : s.commodities) {
    commodities.push_back({{"src", c.src}, {"dst", c.dst}, {"S_bits", c.size_bits}});
  }
  return {{"seed", s.seed},
          {"horizon_s", s.horizon_s},
          {"channel", ChannelToJson(s.channel)},
          {"nodes", nodes},
          {"task", {{"commodities", commodities}}}};
}

Scenario ScenarioFromJson(const json& j) {
  try {
    if (!j.is_object()) throw InputError("scenario must be a JSON object");
    Scenario s;
    s.seed = j.value("seed", uint64_t{0});
    s.horizon_s = j.at("horizon_s").get<double>();
    if (j.contains("channel")) s.channel = ChannelFromJson(j["channel"]);
    for (const json& n : j.at("nodes")) {
      Node node;
      node.id = n.at("id").get<int>();
      node.role = RoleFromName(n.at("role").get<std::string>());
      node.trajectory = TrajectoryFromJson(n.at("trajectory"));
      s.nodes.push_back(node);
    }
    for (const json& c : j.at("task").at("commodities")) {
      s.commodities.push_back({c.at("src").get<int>(), c.at("dst").get<int>(),
                               c.at("S_bits").get<double>()});
    }
    s.Validate();
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario schema violation: ") + e.what());
  }
}

json PlanToJson(const Network& net, const Plan& plan) {
  json hops = json::array();
  for (int k = 0; k + 1 < plan.route.size(); ++k) {
    if (plan.route.IsVirtual(k)) continue;
    double w = k < static_cast<int>(plan.hop_weights.size()) ? plan.hop_weights[k] : kInf;
    hops.push_back({{"layer", k},
                    {"tx", net.NodeId(plan.route.nodes[k])},
                    {"rx", net.NodeId(plan.route.nodes[k + 1])},
                    {"t_start", plan.boundaries[k]},
                    {"t_end", NumberOrNull(plan.boundaries[k + 1])},
                    {"theta_w", NumberOrNull(w)},
                    {"theta_dbm", DbmOrNull(w)}});
  }
  json trace = json::array();
  for (double v : plan.trace) trace.push_back(NumberOrNull(v));
  json out = {{"method", plan.method},
              {"feasible", plan.feasible},
              {"theta_w", NumberOrNull(plan.theta)},
              {"theta_dbm", DbmOrNull(plan.theta)},
              {"route", IdsOf(net, plan.route)},
              {"boundaries_s", NumbersOrNull(plan.boundaries)},
              {"hops", hops},
              {"trace_w", trace},
              {"iterations", plan.iterations},
              {"converged", plan.converged}};
  if (plan.candidates > 0) out["candidates"] = plan.candidates;
  return out;
}

Plan PlanFromJson(const Network& net, const json& j) {
  try {
    Plan p;
    p.method = j.value("method", std::string("proposed"));
    for (const json& id : j.at("route")) p.route.nodes.push_back(net.IndexOfId(id.get<int>()));
    for (const json& t : j.at("boundaries_s")) {
      p.boundaries.push_back(t.is_null() ? kInf : t.get<double>());
    }
    if (p.route.size() < 2 || p.boundaries.size() != p.route.nodes.size()) {
      throw InputError("plan: route and boundaries must have equal length >= 2");
    }
    p.feasible = j.value("feasible", true);
    p.theta = j.at("theta_w").is_null() ? kInf : j.at("theta_w").get<double>();
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("plan schema violation: ") + e.what());
  }
}

json MultiPlanToJson(const Network& net, const MultiPlan& plan) {
  json plans = json::array();
  for (const Plan& p : plan.plans) plans.push_back(PlanToJson(net, p));
  json shares = json::array();
  for (const auto& row : plan.allocation.shares) shares.push_back(row);
  json trace = json::array();
  for (double v : plan.trace) trace.push_back(NumberOrNull(v));
  return {{"feasible", plan.feasible},
          {"theta_w", NumberOrNull(plan.theta)},
          {"theta_dbm", DbmOrNull(plan.theta)},
          {"commodities", plans},
          {"slots", {{"n_slots", plan.allocation.n_slots}, {"slot_s", plan.allocation.slot_s}}},
          {"shares", shares},
          {"trace_w", trace},
          {"iterations", plan.iterations},
          {"converged", plan.converged},
          {"diagnostics", plan.diagnostics}};
}

json GraphToJson(const Network& net, const SpaceTimeGraph& g) {
  json nodes = json::array();
  for (int v : g.nodes) nodes.push_back(net.NodeId(v));
  json layers = json::array();
  for (int k = 0; k + 1 < g.size(); ++k) {
    json w = json::array();
    for (int a = 0; a < g.size(); ++a) {
      json row = json::array();
      for (int b = 0; b < g.size(); ++b) {
        double x = g.Weight(k, a, b);
        row.push_back(a == b ? json(nullptr) : DbmOrNull(x));
      }
      w.push_back(row);
    }
    layers.push_back({{"t_start", g.boundaries[k]}, {"t_end", g.boundaries[k + 1]},
                      {"weights_dbm", w}});
  }
  return {{"nodes", nodes}, {"boundaries_s", g.boundaries}, {"layers", layers},
          {"note", "diagonal entries are caching edges with zero weight"}};
}

json ReplayToJson(const ReplayReport& r) {
  json flows = json::array();
  for (const FlowReplay& f : r.flows) {
    flows.push_back({{"size_bits", f.size_bits},
                     {"median_ratio", f.median_ratio},
                     {"end_to_end_ratio", f.end_to_end_ratio},
                     {"hop_ratio", f.hop_ratio}});
  }
  return {{"theta_w", r.theta_w},
          {"theta_dbm", WattsToDbm(r.theta_w)},
          {"n_realizations", r.n_realizations},
          {"median_ratio", r.median_ratio},
          {"max_interference_w", r.max_interference_w},
          {"max_policy_rel_error", r.max_policy_rel_error},
          {"samples", r.samples},
          {"flows", flows}};
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace aeroplan
