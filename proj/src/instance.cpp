#include "modroute/instance.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace modroute {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw InputError(std::string("instance: missing field \"") + field + "\"");
  return *it;
}

template <typename T>
T read_as(const json& value, const std::string& field) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InputError("instance: field \"" + field + "\" has the wrong type");
  }
}

NodeId read_node(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw InputError("instance: field \"" + field + "\" must contain integer node ids");
  }
  return value.get<NodeId>();
}

}  // namespace

Instance make_instance(WeightedGraph graph, NodeId module1, NodeId module2,
                       std::vector<NodeId> targets, std::optional<bool> start_joined) {
  if (!graph.valid_node(module1) || !graph.valid_node(module2)) {
    throw InputError("instance: module start is not a node of the graph");
  }
  if (targets.empty()) throw InputError("instance: target set must not be empty");
  for (NodeId t : targets) {
    if (!graph.valid_node(t)) {
      throw InputError("instance: target " + std::to_string(t) + " is not a node of the graph");
    }
  }
  const bool joined = start_joined.value_or(module1 == module2);
  if (joined && module1 != module2) {
    throw InputError("instance: start_joined requires both modules on the same node");
  }
  return Instance{std::move(graph), module1, module2, make_node_set(std::move(targets)), joined};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance: top level must be a JSON object");

  const int nodes = read_as<int>(require(j, "nodes"), "nodes");
  const json& edges_json = require(j, "edges");
  if (!edges_json.is_array()) throw InputError("instance: field \"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(edges_json.size());
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number()) {
      throw InputError("instance: field \"edges\" entries must be [u, v, w]");
    }
    edges.push_back({read_node(e[0], "edges"), read_node(e[1], "edges"), e[2].get<double>()});
  }

  const json& modules = require(j, "modules");
  if (!modules.is_array() || modules.size() != 2) {
    throw InputError("instance: field \"modules\" must be [m1, m2]");
  }
  const json& targets_json = require(j, "targets");
  if (!targets_json.is_array()) throw InputError("instance: field \"targets\" must be an array");
  std::vector<NodeId> targets;
  for (const auto& t : targets_json) targets.push_back(read_node(t, "targets"));

  std::optional<bool> start_joined;
  if (auto it = j.find("start_joined"); it != j.end() && !it->is_null()) {
    start_joined = read_as<bool>(*it, "start_joined");
  }

  return make_instance(WeightedGraph(nodes, std::move(edges)), read_node(modules[0], "modules"),
                       read_node(modules[1], "modules"), std::move(targets), start_joined);
}

json instance_to_json(const Instance& instance) {
  json edges = json::array();
  for (const auto& e : instance.graph.edges()) edges.push_back({e.u, e.v, e.weight});
  return json{{"nodes", instance.graph.node_count()},
              {"edges", std::move(edges)},
              {"modules", {instance.module1, instance.module2}},
              {"targets", instance.targets},
              {"start_joined", instance.start_joined}};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file " + path);
  out << instance_to_json(instance).dump(2) << '\n';
}

}  // namespace modroute
