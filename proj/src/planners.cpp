#include "modroute/planners.hpp"

#include <limits>
#include <stdexcept>

namespace modroute {

namespace {

// Tracks which of a fixed target list are still unvisited.
class Remaining {
 public:
  explicit Remaining(const NodeSet& targets) : targets_(targets), open_(targets.size(), true) {
    count_ = targets.size();
  }

  // Marks `node` visited at time t if it is an open target.
  void visit(NodeId node, std::size_t t, std::vector<Visit>& order) {
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (open_[i] && targets_[i] == node) {
        open_[i] = false;
        --count_;
        order.push_back({node, t});
      }
    }
  }

  std::size_t count() const { return count_; }

  NodeSet open() const {
    NodeSet out;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (open_[i]) out.push_back(targets_[i]);
    }
    return out;
  }

 private:
  const NodeSet& targets_;
  std::vector<bool> open_;
  std::size_t count_;
};

NodeId nearest(const DistanceOracle& oracle, NodeId from, const NodeSet& candidates) {
  NodeId best = candidates.front();
  Cost best_d = oracle.dist(from, best);
  for (NodeId t : candidates) {
    const Cost d = oracle.dist(from, t);
    if (definitely_less(d, best_d)) {
      best = t;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

PlannerResult nn_single(const DistanceOracle& oracle, NodeId start, const NodeSet& targets) {
  PlannerResult result;
  auto& path = result.plan.path1;
  Remaining remaining(targets);
  path.push_back(start);
  remaining.visit(start, 0, result.visit_order);

  NodeId cur = start;
  while (remaining.count() > 0) {
    const NodeId goal = nearest(oracle, cur, remaining.open());
    while (cur != goal) {
      cur = oracle.next_hop(cur, goal);
      path.push_back(cur);
      remaining.visit(cur, path.size() - 1, result.visit_order);
    }
  }
  result.plan.path2.assign(path.size(), start);
  result.total_cost = evaluate_cost(oracle.graph(), result.plan);
  return result;
}

TargetPair best_target_pair(const DistanceOracle& oracle, NodeId a1, NodeId a2,
                            const NodeSet& targets) {
  if (targets.size() < 2) throw InputError("best_target_pair needs at least two targets");
  TargetPair best{-1, -1, std::numeric_limits<Cost>::infinity()};
  for (NodeId t1 : targets) {
    for (NodeId t2 : targets) {
      if (t1 == t2) continue;
      const Cost sum = oracle.dist(a1, t1) + oracle.dist(a2, t2);
      if (best.first < 0 || definitely_less(sum, best.sum)) best = {t1, t2, sum};
    }
  }
  return best;
}

PlannerResult nn_two_agents(const DistanceOracle& oracle, NodeId a1, NodeId a2,
                            const NodeSet& targets) {
  PlannerResult result;
  auto& p1 = result.plan.path1;
  auto& p2 = result.plan.path2;
  Remaining remaining(targets);
  p1.push_back(a1);
  p2.push_back(a2);
  remaining.visit(a1, 0, result.visit_order);
  remaining.visit(a2, 0, result.visit_order);

  // The best pair's distance sum strictly drops every step between visits,
  // so this bound is never reached on a consistent oracle.
  const auto n = static_cast<std::size_t>(oracle.node_count());
  const std::size_t step_limit = (targets.size() + 1) * n * n + n;

  while (remaining.count() > 0) {
    const NodeSet open = remaining.open();
    if (open.size() >= 2) {
      const TargetPair pair = best_target_pair(oracle, a1, a2, open);
      a1 = oracle.next_hop(a1, pair.first);
      a2 = oracle.next_hop(a2, pair.second);
    } else {
      const NodeId goal = open.front();
      if (!definitely_less(oracle.dist(a2, goal), oracle.dist(a1, goal))) {
        a1 = oracle.next_hop(a1, goal);
      } else {
        a2 = oracle.next_hop(a2, goal);
      }
    }
    p1.push_back(a1);
    p2.push_back(a2);
    const std::size_t t = p1.size() - 1;
    remaining.visit(a1, t, result.visit_order);
    remaining.visit(a2, t, result.visit_order);
    if (t > step_limit) throw std::logic_error("nn_two_agents failed to make progress");
  }
  result.total_cost = evaluate_cost(oracle.graph(), result.plan);
  return result;
}

}  // namespace modroute
