#pragma once

#include "modroute/graph.hpp"

namespace modroute {

class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

// Two-way partition of a target set under the shortest-path metric.
struct ClusterSplit {
  NodeSet cluster1;
  NodeSet cluster2;
  NodeId medoid1;
  NodeId medoid2;
  // Davies-Bouldin index: (spread1 + spread2) / d(medoid1, medoid2), where the
  // spread is the mean member-to-medoid distance.
  Cost db_index;
  // Assignment/update rounds until the fixed point.
  int iterations;
};

// 2-medoids: starts from the farthest target pair, then alternates nearest-medoid
// assignment and medoid update until nothing changes. cluster1 always holds the
// smaller medoid id. Throws DegenerateInputError for fewer than two targets.
ClusterSplit cluster_two(const DistanceOracle& oracle, const NodeSet& targets);

// Cluster whose medoid is closer to `from`; ties go to the smaller medoid id.
const NodeSet& nearer_cluster(const DistanceOracle& oracle, const ClusterSplit& split,
                              NodeId from);

}  // namespace modroute
