#include "modroute/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <set>

namespace modroute {

namespace {

constexpr int kMaxAttempts = 1000;

enum class Stream : std::uint32_t { topology = 1, weights = 2, targets = 3 };

// One independent stream per purpose and attempt, so redrawing one aspect does
// not disturb the others. Only raw engine output is used, which is identical
// across standard library implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream, int attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(attempt)};
    engine_.seed(seq);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Weight in [lo, hi] rounded to two decimals.
  double weight(const WeightRange& r) {
    const double w = std::round((r.lo + (r.hi - r.lo) * unit()) * 100.0) / 100.0;
    return std::clamp(w, r.lo, r.hi);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

class EdgeBuilder {
 public:
  bool add(NodeId u, NodeId v, double w) {
    if (u == v || !pairs_.emplace(std::min(u, v), std::max(u, v)).second) return false;
    edges_.push_back({u, v, w});
    return true;
  }
  std::vector<Edge> take() { return std::move(edges_); }

 private:
  std::set<std::pair<NodeId, NodeId>> pairs_;
  std::vector<Edge> edges_;
};

void validate(const ClusteredGenParams& p) {
  if (p.cluster_count < 2) throw InputError("gen: cluster_count must be at least 2");
  if (p.target_count < 1) throw InputError("gen: target_count must be at least 1");
  if (p.target_count > p.node_count - 2) {
    throw InputError("gen: target_count must not exceed node_count - 2 (two start nodes are reserved)");
  }
  if (p.node_count - 2 < p.cluster_count) {
    throw InputError("gen: need at least one non-start node per cluster");
  }
  for (const auto* r : {&p.intra_weight, &p.inter_weight}) {
    if (!(r->lo > 0.0) || r->hi < r->lo) throw InputError("gen: weight ranges must satisfy 0 < lo <= hi");
  }
}

std::vector<int> even_split(int total, int parts) {
  std::vector<int> sizes(static_cast<std::size_t>(parts), total / parts);
  for (int i = 0; i < total % parts; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

bool cluster_condition_holds(const DistanceOracle& oracle, const NodeSet& nodes,
                             const NodeSet& targets) {
  if (targets.empty()) return true;
  Cost widest = 0.0;
  for (NodeId a : targets) {
    for (NodeId b : targets) widest = std::max(widest, oracle.dist(a, b));
  }
  Cost exit = std::numeric_limits<Cost>::infinity();
  for (NodeId a : targets) {
    for (NodeId b = 0; b < oracle.node_count(); ++b) {
      if (!contains(nodes, b)) exit = std::min(exit, oracle.dist(a, b));
    }
  }
  return definitely_less(widest, exit);
}

std::optional<ClusteredInstance> attempt(const ClusteredGenParams& p, int attempt_no) {
  Rng topo(p.seed, Stream::topology, attempt_no);
  Rng weights(p.seed, Stream::weights, attempt_no);
  Rng picks(p.seed, Stream::targets, attempt_no);

  std::vector<NodeSet> cluster_nodes;
  std::vector<NodeSet> cluster_targets;
  const auto sizes = even_split(p.node_count - 2, p.cluster_count);
  const auto quotas = even_split(p.target_count, p.cluster_count);
  NodeId next = 2;
  for (int size : sizes) {
    NodeSet members;
    for (int i = 0; i < size; ++i) members.push_back(next++);
    cluster_nodes.push_back(std::move(members));
  }

  EdgeBuilder edges;
  for (const auto& members : cluster_nodes) {
    std::vector<NodeId> order = members;
    topo.shuffle(order);
    for (std::size_t i = 1; i < order.size(); ++i) {
      edges.add(order[i], order[topo.below(i)], weights.weight(p.intra_weight));
    }
    const auto n = members.size();
    const auto free_pairs = static_cast<int>(n * (n - 1) / 2 - (n - 1));
    const int extra =
        std::min(free_pairs, static_cast<int>(std::ceil(0.5 * static_cast<double>(n))));
    for (int added = 0; added < extra;) {
      if (edges.add(members[topo.below(n)], members[topo.below(n)], weights.weight(p.intra_weight))) {
        ++added;
      }
    }
  }

  std::vector<NodeSet> groups{{0}, {1}};
  groups.insert(groups.end(), cluster_nodes.begin(), cluster_nodes.end());
  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  topo.shuffle(order);
  auto link = [&](const NodeSet& a, const NodeSet& b) {
    return edges.add(a[topo.below(a.size())], b[topo.below(b.size())], weights.weight(p.inter_weight));
  };
  for (std::size_t i = 1; i < order.size(); ++i) link(groups[order[i]], groups[order[topo.below(i)]]);
  for (int tries = 0; tries < 16; ++tries) {
    const auto a = topo.below(groups.size()), b = topo.below(groups.size());
    if (a != b && link(groups[a], groups[b])) break;
  }

  std::vector<NodeId> targets;
  for (std::size_t c = 0; c < cluster_nodes.size(); ++c) {
    const auto quota = static_cast<std::size_t>(quotas[c]);
    if (quota > cluster_nodes[c].size()) {
      throw InputError("gen: cluster " + std::to_string(c) + " is too small for its target quota");
    }
    std::vector<NodeId> members = cluster_nodes[c];
    picks.shuffle(members);
    members.resize(quota);
    cluster_targets.push_back(make_node_set(members));
    targets.insert(targets.end(), members.begin(), members.end());
  }

  Instance instance =
      make_instance(WeightedGraph(p.node_count, edges.take()), 0, 1, std::move(targets), false);
  const DistanceOracle oracle(instance.graph);
  for (std::size_t c = 0; c < cluster_nodes.size(); ++c) {
    if (!cluster_condition_holds(oracle, cluster_nodes[c], cluster_targets[c])) return std::nullopt;
  }
  return ClusteredInstance{std::move(instance), std::move(cluster_nodes), std::move(cluster_targets),
                           attempt_no + 1};
}

}  // namespace

ClusteredInstance gen_clustered_detailed(const ClusteredGenParams& params) {
  validate(params);
  for (int a = 0; a < kMaxAttempts; ++a) {
    if (auto result = attempt(params, a)) return std::move(*result);
  }
  throw InputError("gen: no draw satisfied the cluster condition after " +
                   std::to_string(kMaxAttempts) + " attempts; widen the weight ranges");
}

Instance gen_clustered(const ClusteredGenParams& params) {
  return gen_clustered_detailed(params).instance;
}

Instance gen_theory(const TheoryGenParams& p) {
  if (!(p.alpha > 0.0) || !(p.lambda > 0.0)) throw InputError("gen: alpha and lambda must be positive");
  if (p.cluster_size < 1) throw InputError("gen: cluster_size must be at least 1");
  const int k = p.cluster_size;
  if (k > 1) {
    for (double beta : {p.beta1, p.beta2}) {
      if (!(beta > 0.0)) throw InputError("gen: beta must be positive");
      if (!(beta < p.lambda)) {
        throw InputError("gen: cluster condition requires beta < lambda");
      }
    }
  }

  std::vector<Edge> edges{{0, 1, p.alpha}};
  std::vector<NodeId> targets;
  auto chain = [&](NodeId first, double beta) {
    edges.push_back({1, first, p.lambda});
    for (int i = 0; i < k; ++i) targets.push_back(first + i);
    for (int i = 1; i < k; ++i) edges.push_back({first + i - 1, first + i, beta / (k - 1)});
  };
  chain(2, p.beta1);
  chain(2 + k, p.beta2);
  return make_instance(WeightedGraph(2 + 2 * k, std::move(edges)), 0, 0, std::move(targets), true);
}

}  // namespace modroute
