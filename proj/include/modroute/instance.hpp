#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "modroute/graph.hpp"

namespace modroute {

// A graph, two module start nodes and the targets to visit.
struct Instance {
  WeightedGraph graph;
  NodeId module1;
  NodeId module2;
  NodeSet targets;
  bool start_joined;
};

// Validates node ranges, target non-emptiness and the joined-start rule.
// start_joined defaults to (module1 == module2).
Instance make_instance(WeightedGraph graph, NodeId module1, NodeId module2,
                       std::vector<NodeId> targets, std::optional<bool> start_joined = {});

// Canonical on-disk format:
// {"nodes": N, "edges": [[u,v,w],...], "modules": [m1,m2], "targets": [...], "start_joined": bool}
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace modroute
