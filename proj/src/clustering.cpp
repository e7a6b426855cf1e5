#include "modroute/clustering.hpp"

#include <utility>

namespace modroute {

namespace {

NodeId best_medoid(const DistanceOracle& oracle, const NodeSet& members) {
  NodeId best = members.front();
  Cost best_sum = -1.0;
  for (NodeId candidate : members) {
    Cost sum = 0.0;
    for (NodeId m : members) sum += oracle.dist(candidate, m);
    if (best_sum < 0.0 || definitely_less(sum, best_sum)) {
      best = candidate;
      best_sum = sum;
    }
  }
  return best;
}

Cost spread(const DistanceOracle& oracle, const NodeSet& members, NodeId medoid) {
  Cost sum = 0.0;
  for (NodeId m : members) sum += oracle.dist(medoid, m);
  return sum / static_cast<Cost>(members.size());
}

}  // namespace

ClusterSplit cluster_two(const DistanceOracle& oracle, const NodeSet& targets) {
  if (targets.size() < 2) {
    throw DegenerateInputError("cluster_two needs at least two targets, got " +
                               std::to_string(targets.size()));
  }

  NodeId m1 = targets[0], m2 = targets[1];
  Cost widest = oracle.dist(m1, m2);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      const Cost d = oracle.dist(targets[i], targets[j]);
      if (definitely_less(widest, d)) {
        widest = d;
        m1 = targets[i];
        m2 = targets[j];
      }
    }
  }

  NodeSet c1, c2;
  int iterations = 0;
  // Guard against tie-driven cycles; a fixed point is normally reached far earlier.
  const int max_iterations = 4 * static_cast<int>(targets.size()) + 4;
  while (true) {
    ++iterations;
    if (m2 < m1) std::swap(m1, m2);
    c1.clear();
    c2.clear();
    for (NodeId t : targets) {
      const Cost d1 = oracle.dist(t, m1), d2 = oracle.dist(t, m2);
      (definitely_less(d2, d1) ? c2 : c1).push_back(t);
    }
    const NodeId next1 = best_medoid(oracle, c1);
    const NodeId next2 = best_medoid(oracle, c2);
    if ((next1 == m1 && next2 == m2) || iterations >= max_iterations) break;
    m1 = next1;
    m2 = next2;
  }

  const Cost separation = oracle.dist(m1, m2);
  const Cost db = (spread(oracle, c1, m1) + spread(oracle, c2, m2)) / separation;
  return ClusterSplit{std::move(c1), std::move(c2), m1, m2, db, iterations};
}

const NodeSet& nearer_cluster(const DistanceOracle& oracle, const ClusterSplit& split,
                              NodeId from) {
  const Cost d1 = oracle.dist(from, split.medoid1);
  const Cost d2 = oracle.dist(from, split.medoid2);
  if (approx_equal(d1, d2)) {
    return split.medoid1 < split.medoid2 ? split.cluster1 : split.cluster2;
  }
  return d1 < d2 ? split.cluster1 : split.cluster2;
}

}  // namespace modroute
