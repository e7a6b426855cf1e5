#include "modroute/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

namespace modroute {

bool within_oracle_guard(const Instance& instance) {
  return static_cast<int>(instance.targets.size()) <= kOracleMaxTargets &&
         instance.graph.node_count() <= kOracleMaxNodes;
}

OracleResult exact_optimal(const Instance& instance, bool modular) {
  if (!within_oracle_guard(instance)) {
    throw OracleGuardError("exact oracle limited to " + std::to_string(kOracleMaxTargets) +
                           " targets and " + std::to_string(kOracleMaxNodes) + " nodes (got " +
                           std::to_string(instance.targets.size()) + " targets, " +
                           std::to_string(instance.graph.node_count()) + " nodes)");
  }
  const WeightedGraph& g = instance.graph;
  const auto n = static_cast<std::uint32_t>(g.node_count());
  const auto k = static_cast<std::uint32_t>(instance.targets.size());
  const std::uint32_t full = (1u << k) - 1u;

  std::vector<std::uint32_t> bit_of(n, 0);
  for (std::uint32_t i = 0; i < k; ++i) bit_of[instance.targets[i]] = 1u << i;

  // State id orders lexicographically by (pos1, pos2, mask).
  auto encode = [&](std::uint32_t p1, std::uint32_t p2, std::uint32_t mask) {
    return ((p1 * n + p2) << k) | mask;
  };
  const std::size_t state_count = static_cast<std::size_t>(n) * n << k;
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<Cost> best(state_count, std::numeric_limits<Cost>::infinity());
  std::vector<std::uint32_t> pred(state_count, kNone);
  std::vector<bool> settled(state_count, false);

  const auto s1 = static_cast<std::uint32_t>(instance.module1);
  const auto s2 = static_cast<std::uint32_t>(instance.module2);
  const std::uint32_t start = encode(s1, s2, bit_of[s1] | bit_of[s2]);

  using Item = std::pair<Cost, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  best[start] = 0.0;
  open.emplace(0.0, start);

  OracleResult result;
  std::uint32_t goal = kNone;
  std::vector<Neighbor> moves1, moves2;
  while (!open.empty()) {
    const auto [cost, id] = open.top();
    open.pop();
    if (settled[id]) continue;
    settled[id] = true;
    ++result.settled_states;
    const std::uint32_t mask = id & full;
    if (mask == full) {
      goal = id;
      break;
    }
    const std::uint32_t pair = id >> k;
    const std::uint32_t p1 = pair / n, p2 = pair % n;

    moves1.assign(1, Neighbor{static_cast<NodeId>(p1), 0.0});
    moves2.assign(1, Neighbor{static_cast<NodeId>(p2), 0.0});
    const auto& adj1 = g.neighbors(static_cast<NodeId>(p1));
    const auto& adj2 = g.neighbors(static_cast<NodeId>(p2));
    moves1.insert(moves1.end(), adj1.begin(), adj1.end());
    moves2.insert(moves2.end(), adj2.begin(), adj2.end());

    for (std::size_t i = 0; i < moves1.size(); ++i) {
      for (std::size_t j = 0; j < moves2.size(); ++j) {
        if (i == 0 && j == 0) continue;
        const auto q1 = static_cast<std::uint32_t>(moves1[i].node);
        const auto q2 = static_cast<std::uint32_t>(moves2[j].node);
        Cost step = moves1[i].weight + moves2[j].weight;
        if (modular && i > 0 && p1 == p2 && q1 == q2) step = moves1[i].weight;
        const std::uint32_t next = encode(q1, q2, mask | bit_of[q1] | bit_of[q2]);
        const Cost candidate = cost + step;
        if (!settled[next] && candidate < best[next]) {
          best[next] = candidate;
          pred[next] = id;
          open.emplace(candidate, next);
        }
      }
    }
  }
  // Connected graphs always reach the full mask.
  if (goal == kNone) throw std::logic_error("exact_optimal: goal state unreachable");

  result.cost = best[goal];
  for (std::uint32_t id = goal; id != kNone; id = pred[id]) {
    const std::uint32_t pair = id >> k;
    result.plan.path1.push_back(static_cast<NodeId>(pair / n));
    result.plan.path2.push_back(static_cast<NodeId>(pair % n));
  }
  std::reverse(result.plan.path1.begin(), result.plan.path1.end());
  std::reverse(result.plan.path2.begin(), result.plan.path2.end());
  return result;
}

}  // namespace modroute
