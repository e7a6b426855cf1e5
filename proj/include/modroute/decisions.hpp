#pragma once

#include <optional>
#include <vector>

#include "modroute/graph.hpp"

namespace modroute {

// Davies-Bouldin threshold below which the split search only follows the
// cluster nearer to the agent.
inline constexpr double kDefaultDbThreshold = 0.4;

// Nodes minimizing (d(v, m1) + d(v, m2)) / 2, i.e. the nodes lying on some
// shortest m1-m2 path.
NodeSet central_nodes(const DistanceOracle& oracle, NodeId m1, NodeId m2);

struct JoinDecision {
  bool should_join = false;
  // Set iff should_join.
  std::optional<NodeId> join_node;
  Cost d_between = 0.0;
  // Smallest central-node-to-closest-remaining-target distance.
  Cost d_c_min = 0.0;
};

// Join when the modules are at least as close to each other as the best central
// node is to the remaining targets. The join node is that central node
// (smallest id on ties). Throws InputError for an empty remaining set.
JoinDecision join_decision(const DistanceOracle& oracle, NodeId m1, NodeId m2,
                           const NodeSet& remaining);

struct SplitCandidate {
  NodeId node;
  Cost cost;
};

struct SplitDecision {
  NodeId split_node;
  // Position of split_node in agent_path; the joined agent travels agent_path[0..split_index].
  std::size_t split_index;
  Cost predicted_cost;
  // One entry per node of agent_path, in path order.
  std::vector<SplitCandidate> candidate_costs;
  // Node-expanded nearest-neighbor path of the joined agent.
  std::vector<NodeId> agent_path;
};

// Where a joined agent at `agent` should split.
//
// If the remaining targets form two well separated clusters (DB index below
// `db_threshold`), the candidate path only covers the cluster nearer to the
// agent; otherwise it covers every remaining target. Each node on that
// nearest-neighbor path is priced as the joined travel up to it plus the
// independent (no shared edges) cost of the two-agent planner started there
// over all targets not yet crossed. The earliest cheapest node wins.
SplitDecision split_node(const DistanceOracle& oracle, NodeId agent, const NodeSet& remaining,
                         double db_threshold = kDefaultDbThreshold);

}  // namespace modroute
