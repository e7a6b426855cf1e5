#pragma once

#include <optional>
#include <vector>

#include "modroute/graph.hpp"

namespace modroute {

struct Visit {
  NodeId target;
  std::size_t time;
};

struct PlannerResult {
  TimedPlan plan;
  // Modular cost of `plan`: shared same-direction traversals are paid once.
  Cost total_cost = 0.0;
  std::vector<Visit> visit_order;
};

// Single agent that always heads for the closest unvisited target (ties to the
// smallest id). Targets crossed on the way count as visited. The second path
// waits at `start` for the whole horizon.
PlannerResult nn_single(const DistanceOracle& oracle, NodeId start, const NodeSet& targets);

struct TargetPair {
  NodeId first;
  NodeId second;
  Cost sum;
};

// Distinct (t1, t2) minimizing d(a1, t1) + d(a2, t2); lexicographically smallest
// pair on ties. Requires at least two targets.
TargetPair best_target_pair(const DistanceOracle& oracle, NodeId a1, NodeId a2,
                            const NodeSet& targets);

// Two agents re-assigned every step to the best distinct target pair and moved
// one node each along their shortest paths. With one target left, only the
// closer agent (agent 1 on ties) moves.
PlannerResult nn_two_agents(const DistanceOracle& oracle, NodeId a1, NodeId a2,
                            const NodeSet& targets);

}  // namespace modroute
