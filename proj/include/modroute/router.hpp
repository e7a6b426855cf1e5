#pragma once

#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "modroute/decisions.hpp"
#include "modroute/graph.hpp"
#include "modroute/instance.hpp"

namespace modroute {

enum class EventKind { join, split };

std::string_view to_string(EventKind kind);

struct RouteEvent {
  std::size_t time;
  EventKind kind;
  NodeId node;
};

struct RouteResult {
  TimedPlan plan;
  // Modular cost for route(), independent cost for baseline_non_modular().
  Cost total_cost = 0.0;
  std::vector<RouteEvent> events;
  // joined[t]: whether the modules move as one agent after time step t.
  std::vector<bool> joined;
};

struct RouteOptions {
  double db_threshold = kDefaultDbThreshold;
};

// Joining/splitting heuristic for two modular agents. While joined the agent
// picks a split node and travels there; while separated the modules either
// head for a join node or advance one step following the cheapest of three
// nearest-neighbor plans (module 1 alone, module 2 alone, both).
RouteResult route(const Instance& instance, const RouteOptions& options = {});
RouteResult route(const Instance& instance, const DistanceOracle& oracle,
                  const RouteOptions& options = {});

// Best of {module 1 alone, module 2 alone, both with the two-agent planner},
// priced without any shared-edge discount.
RouteResult baseline_non_modular(const Instance& instance);
RouteResult baseline_non_modular(const Instance& instance, const DistanceOracle& oracle);

// {"steps": [{"t", "m1", "m2", "joined", "event"}...], "cost": c}
nlohmann::json route_trace(const RouteResult& result);

}  // namespace modroute
