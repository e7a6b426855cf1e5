#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modroute {

using NodeId = std::int32_t;
using Cost = double;

// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

NodeSet make_node_set(std::vector<NodeId> nodes);
bool contains(const NodeSet& set, NodeId node);

// Malformed graphs, instances or arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A timed plan that is not realizable on its graph.
class InvalidPlanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Floating point comparisons used for every tie-break in the library.
// Two costs within a relative 1e-9 of each other are treated as equal.
bool approx_equal(Cost a, Cost b);
bool definitely_less(Cost a, Cost b);

struct Edge {
  NodeId u;
  NodeId v;
  Cost weight;
};

struct Neighbor {
  NodeId node;
  Cost weight;
};

// Undirected, connected graph with strictly positive edge weights and
// dense node ids 0..node_count-1. Immutable once constructed.
class WeightedGraph {
 public:
  WeightedGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbors sorted by id.
  const std::vector<Neighbor>& neighbors(NodeId u) const;
  std::optional<Cost> weight(NodeId u, NodeId v) const;
  bool valid_node(NodeId u) const { return u >= 0 && u < node_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

struct ShortestPath {
  Cost cost = 0.0;
  std::vector<NodeId> nodes;
};

// Dijkstra between two nodes. Ties are broken towards the smallest
// next-hop id, matching DistanceOracle::next_hop.
ShortestPath shortest_path(const WeightedGraph& g, NodeId from, NodeId to);

// All-pairs shortest distances plus first-hop table. Owns a copy of the graph
// so planners can price plans without a separate handle.
class DistanceOracle {
 public:
  explicit DistanceOracle(WeightedGraph graph);

  const WeightedGraph& graph() const { return graph_; }
  int node_count() const { return graph_.node_count(); }

  Cost dist(NodeId u, NodeId v) const { return dist_[index(u, v)]; }
  // First node after u on the canonical shortest u-v path; u itself if u == v.
  NodeId next_hop(NodeId u, NodeId v) const { return next_[index(u, v)]; }
  // Full node sequence u..v following next_hop.
  std::vector<NodeId> path(NodeId u, NodeId v) const;

 private:
  std::size_t index(NodeId u, NodeId v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(graph_.node_count()) +
           static_cast<std::size_t>(v);
  }

  WeightedGraph graph_;
  std::vector<Cost> dist_;
  std::vector<NodeId> next_;
};

DistanceOracle all_pairs(const WeightedGraph& g);

// Two synchronized module paths; entry t is the module's node at time t.
struct TimedPlan {
  std::vector<NodeId> path1;
  std::vector<NodeId> path2;

  std::size_t horizon() const { return path1.empty() ? 0 : path1.size() - 1; }
};

enum class CostModel {
  // Modules crossing the same edge in the same direction at the same time
  // pay for it once.
  modular,
  // Every traversal is paid for separately.
  independent,
};

void validate_plan(const WeightedGraph& g, const TimedPlan& plan);

Cost evaluate_cost(const WeightedGraph& g, const TimedPlan& plan,
                   CostModel model = CostModel::modular);

NodeSet visited_targets(const TimedPlan& plan, const NodeSet& targets);

// Pads the shorter path by repeating its last node.
void equalize_lengths(TimedPlan& plan);

}  // namespace modroute
