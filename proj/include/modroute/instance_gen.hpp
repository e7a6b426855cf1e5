#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modroute/instance.hpp"

namespace modroute {

struct WeightRange {
  double lo;
  double hi;
};

struct ClusteredGenParams {
  std::uint64_t seed = 1;
  int node_count = 18;
  int target_count = 8;
  int cluster_count = 3;
  WeightRange intra_weight{1.0, 3.0};
  WeightRange inter_weight{5.0, 10.0};
};

struct ClusteredInstance {
  Instance instance;
  // Node groups (excluding the two start nodes) and the targets inside each.
  std::vector<NodeSet> cluster_nodes;
  std::vector<NodeSet> cluster_targets;
  // Generation attempts needed to satisfy the cluster condition.
  int attempts = 1;
};

// Random clustered graph. Nodes 0 and 1 are the module starts A and B; the
// remaining nodes form `cluster_count` groups, each a random spanning tree plus
// extra edges with intra-range weights. A random connector tree with
// inter-range weights links A, B and the clusters. Targets are spread over the
// clusters as evenly as possible and every cluster satisfies
//   max target-to-target distance < min distance from its targets to outside nodes;
// violating draws are regenerated with the next sub-seed. Throws InputError on
// infeasible parameters.
ClusteredInstance gen_clustered_detailed(const ClusteredGenParams& params);
Instance gen_clustered(const ClusteredGenParams& params);

struct TheoryGenParams {
  double alpha = 2.0;
  double lambda = 5.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  int cluster_size = 2;
};

// Start node A (0) joined to hub B (1) by an edge of weight alpha, and two
// chains hanging off B: B-x1-...-xk and B-y1-...-yk with a first edge of weight
// lambda and chain edges summing to beta1 (resp. beta2). All chain nodes are
// targets; the modules start joined at A. Requires beta_i < lambda. Node ids:
// A = 0, B = 1, x1..xk = 2..k+1, y1..yk = k+2..2k+1. With cluster_size 1
// the betas are unused.
Instance gen_theory(const TheoryGenParams& params);

}  // namespace modroute
