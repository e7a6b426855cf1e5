#include "modroute/decisions.hpp"

#include <limits>

#include "modroute/clustering.hpp"
#include "modroute/planners.hpp"

namespace modroute {

NodeSet central_nodes(const DistanceOracle& oracle, NodeId m1, NodeId m2) {
  const Cost between = oracle.dist(m1, m2);
  NodeSet out;
  for (NodeId v = 0; v < oracle.node_count(); ++v) {
    if (approx_equal(oracle.dist(v, m1) + oracle.dist(v, m2), between)) out.push_back(v);
  }
  return out;
}

JoinDecision join_decision(const DistanceOracle& oracle, NodeId m1, NodeId m2,
                           const NodeSet& remaining) {
  if (remaining.empty()) throw InputError("join_decision needs at least one remaining target");

  JoinDecision decision;
  decision.d_between = oracle.dist(m1, m2);
  decision.d_c_min = std::numeric_limits<Cost>::infinity();
  NodeId best = -1;
  for (NodeId c : central_nodes(oracle, m1, m2)) {
    Cost d_c = std::numeric_limits<Cost>::infinity();
    for (NodeId t : remaining) d_c = std::min(d_c, oracle.dist(c, t));
    if (best < 0 || definitely_less(d_c, decision.d_c_min)) {
      best = c;
      decision.d_c_min = d_c;
    }
  }
  decision.should_join = !definitely_less(decision.d_c_min, decision.d_between);
  if (decision.should_join) decision.join_node = best;
  return decision;
}

SplitDecision split_node(const DistanceOracle& oracle, NodeId agent, const NodeSet& remaining,
                         double db_threshold) {
  NodeSet focus = remaining;
  if (remaining.size() >= 2) {
    const ClusterSplit split = cluster_two(oracle, remaining);
    if (split.db_index < db_threshold) focus = nearer_cluster(oracle, split, agent);
  }

  SplitDecision decision;
  decision.agent_path = nn_single(oracle, agent, focus).plan.path1;
  const auto& path = decision.agent_path;
  const WeightedGraph& g = oracle.graph();

  NodeSet uncovered = remaining;
  Cost prefix = 0.0;
  for (std::size_t r = 0; r < path.size(); ++r) {
    const NodeId node = path[r];
    if (r > 0) prefix += *g.weight(path[r - 1], node);
    std::erase(uncovered, node);

    Cost after_split = 0.0;
    if (!uncovered.empty()) {
      const auto plan = nn_two_agents(oracle, node, node, uncovered).plan;
      after_split = evaluate_cost(g, plan, CostModel::independent);
    }
    const Cost total = prefix + after_split;
    decision.candidate_costs.push_back({node, total});
    if (r == 0 || definitely_less(total, decision.predicted_cost)) {
      decision.split_index = r;
      decision.split_node = node;
      decision.predicted_cost = total;
    }
  }
  return decision;
}

}  // namespace modroute
