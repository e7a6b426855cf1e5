#include "modroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <utility>

namespace modroute {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::infinity();
constexpr double kRelTol = 1e-9;

std::string pair_str(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Single-source Dijkstra; distances only.
std::vector<Cost> dijkstra(const WeightedGraph& g, NodeId source) {
  std::vector<Cost> dist(static_cast<std::size_t>(g.node_count()), kInf);
  using Item = std::pair<Cost, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : g.neighbors(u)) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        queue.emplace(dist[v], v);
      }
    }
  }
  return dist;
}

// Smallest-id neighbor of u that starts a shortest path to the node whose
// distance row is `to_target`.
NodeId pick_next_hop(const WeightedGraph& g, NodeId u, const std::vector<Cost>& to_target) {
  for (const auto& [n, w] : g.neighbors(u)) {
    if (approx_equal(w + to_target[n], to_target[u])) return n;
  }
  // Unreachable for a consistent distance row.
  throw std::logic_error("no shortest-path successor from node " + std::to_string(u));
}

}  // namespace

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

bool contains(const NodeSet& set, NodeId node) {
  return std::binary_search(set.begin(), set.end(), node);
}

bool approx_equal(Cost a, Cost b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kRelTol * scale;
}

bool definitely_less(Cost a, Cost b) { return a < b && !approx_equal(a, b); }

WeightedGraph::WeightedGraph(int node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  if (node_count <= 0) throw InputError("graph must have at least one node");
  adjacency_.resize(static_cast<std::size_t>(node_count));
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& e : edges_) {
    if (!valid_node(e.u) || !valid_node(e.v)) {
      throw InputError("edge " + pair_str(e.u, e.v) + " references an unknown node");
    }
    if (e.u == e.v) throw InputError("self-loop at node " + std::to_string(e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InputError("edge " + pair_str(e.u, e.v) +
                       " must have a finite, strictly positive weight");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InputError("duplicate edge " + pair_str(e.u, e.v));
    }
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }

  std::vector<bool> reached(adjacency_.size(), false);
  std::vector<NodeId> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[u]) {
      if (!reached[nb.node]) {
        reached[nb.node] = true;
        stack.push_back(nb.node);
      }
    }
  }
  for (NodeId v = 0; v < node_count; ++v) {
    if (!reached[v]) {
      throw InputError("graph is disconnected: no path between nodes " + pair_str(0, v));
    }
  }
}

const std::vector<Neighbor>& WeightedGraph::neighbors(NodeId u) const {
  if (!valid_node(u)) throw InputError("unknown node " + std::to_string(u));
  return adjacency_[u];
}

std::optional<Cost> WeightedGraph::weight(NodeId u, NodeId v) const {
  const auto& list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  if (it == list.end() || it->node != v) return std::nullopt;
  return it->weight;
}

ShortestPath shortest_path(const WeightedGraph& g, NodeId from, NodeId to) {
  if (!g.valid_node(from) || !g.valid_node(to)) {
    throw InputError("shortest_path: unknown node in " + pair_str(from, to));
  }
  const auto to_target = dijkstra(g, to);
  ShortestPath result;
  result.nodes.push_back(from);
  NodeId cur = from;
  while (cur != to) {
    NodeId next = pick_next_hop(g, cur, to_target);
    result.cost += *g.weight(cur, next);
    result.nodes.push_back(next);
    cur = next;
  }
  return result;
}

DistanceOracle::DistanceOracle(WeightedGraph graph) : graph_(std::move(graph)) {
  const auto n = static_cast<std::size_t>(graph_.node_count());
  dist_.assign(n * n, kInf);
  next_.assign(n * n, -1);
  for (NodeId s = 0; s < graph_.node_count(); ++s) {
    const auto row = dijkstra(graph_, s);
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
      // Keep the table exactly symmetric: the lower id's run wins.
      if (v < s) {
        dist_[index(s, v)] = dist_[index(v, s)];
      } else {
        dist_[index(s, v)] = row[v];
      }
    }
  }
  std::vector<Cost> column(n);
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    for (NodeId u = 0; u < graph_.node_count(); ++u) column[u] = dist_[index(u, v)];
    for (NodeId u = 0; u < graph_.node_count(); ++u) {
      next_[index(u, v)] = (u == v) ? u : pick_next_hop(graph_, u, column);
    }
  }
}

std::vector<NodeId> DistanceOracle::path(NodeId u, NodeId v) const {
  if (!graph_.valid_node(u) || !graph_.valid_node(v)) {
    throw InputError("path: unknown node in " + pair_str(u, v));
  }
  std::vector<NodeId> nodes{u};
  while (u != v) {
    u = next_hop(u, v);
    nodes.push_back(u);
  }
  return nodes;
}

DistanceOracle all_pairs(const WeightedGraph& g) { return DistanceOracle(g); }

void validate_plan(const WeightedGraph& g, const TimedPlan& plan) {
  if (plan.path1.empty() || plan.path2.empty()) {
    throw InvalidPlanError("plan paths must contain at least the start node");
  }
  if (plan.path1.size() != plan.path2.size()) {
    throw InvalidPlanError("plan paths have different lengths (" +
                           std::to_string(plan.path1.size()) + " vs " +
                           std::to_string(plan.path2.size()) + ")");
  }
  for (const auto* path : {&plan.path1, &plan.path2}) {
    for (std::size_t t = 0; t < path->size(); ++t) {
      const NodeId cur = (*path)[t];
      if (!g.valid_node(cur)) {
        throw InvalidPlanError("plan visits unknown node " + std::to_string(cur));
      }
      if (t == 0) continue;
      const NodeId prev = (*path)[t - 1];
      if (prev != cur && !g.weight(prev, cur)) {
        throw InvalidPlanError("plan step " + std::to_string(t) + " moves between non-adjacent nodes " +
                               pair_str(prev, cur));
      }
    }
  }
}

Cost evaluate_cost(const WeightedGraph& g, const TimedPlan& plan, CostModel model) {
  validate_plan(g, plan);
  Cost total = 0.0;
  for (std::size_t t = 1; t < plan.path1.size(); ++t) {
    const NodeId a0 = plan.path1[t - 1], a1 = plan.path1[t];
    const NodeId b0 = plan.path2[t - 1], b1 = plan.path2[t];
    const bool a_moves = a0 != a1;
    const bool b_moves = b0 != b1;
    if (a_moves) total += *g.weight(a0, a1);
    if (b_moves) {
      const bool shared = model == CostModel::modular && a_moves && a0 == b0 && a1 == b1;
      if (!shared) total += *g.weight(b0, b1);
    }
  }
  return total;
}

NodeSet visited_targets(const TimedPlan& plan, const NodeSet& targets) {
  NodeSet visited;
  for (NodeId target : targets) {
    const bool hit =
        std::find(plan.path1.begin(), plan.path1.end(), target) != plan.path1.end() ||
        std::find(plan.path2.begin(), plan.path2.end(), target) != plan.path2.end();
    if (hit) visited.push_back(target);
  }
  return make_node_set(std::move(visited));
}

void equalize_lengths(TimedPlan& plan) {
  const auto len = std::max(plan.path1.size(), plan.path2.size());
  for (auto* path : {&plan.path1, &plan.path2}) {
    if (path->empty()) continue;
    const NodeId last = path->back();
    path->resize(len, last);
  }
}

}  // namespace modroute
