#include <doctest.h>

#include <random>

#include "modroute/instance_gen.hpp"
#include "modroute/planners.hpp"
#include "test_support.hpp"

using namespace modroute;
using testsupport::line;

TEST_CASE("single agent on a line") {
  const DistanceOracle o(line(5));
  const auto r = nn_single(o, 0, {2, 4});
  CHECK(r.plan.path1 == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(r.plan.path2 == std::vector<NodeId>(5, 0));
  CHECK(r.total_cost == 4.0);
  REQUIRE(r.visit_order.size() == 2);
  CHECK(r.visit_order[0].target == 2);
  CHECK(r.visit_order[0].time == 2);
  CHECK(r.visit_order[1].target == 4);
}

TEST_CASE("single agent already on its only target") {
  const DistanceOracle o(line(3));
  const auto r = nn_single(o, 1, {1});
  CHECK(r.total_cost == 0.0);
  CHECK(r.plan.horizon() == 0);
}

TEST_CASE("single agent star tie goes to the smaller id") {
  const DistanceOracle o(WeightedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
  const auto r = nn_single(o, 1, {2, 3});
  CHECK(r.total_cost == 4.0);
  REQUIRE(r.visit_order.size() == 2);
  CHECK(r.visit_order[0].target == 2);
  CHECK(r.visit_order[1].target == 3);
}

TEST_CASE("two agents on a line split the targets") {
  const DistanceOracle o(line(5));
  const auto pair = best_target_pair(o, 0, 4, {1, 3});
  CHECK(pair.first == 1);
  CHECK(pair.second == 3);
  CHECK(pair.sum == 2.0);
  const auto r = nn_two_agents(o, 0, 4, {1, 3});
  CHECK(r.total_cost == 2.0);
}

TEST_CASE("two agents already on both targets") {
  const DistanceOracle o(line(5));
  const auto r = nn_two_agents(o, 1, 3, {1, 3});
  CHECK(r.total_cost == 0.0);
  CHECK(r.plan.horizon() == 0);
}

TEST_CASE("two agents from the hub of the theory instance") {
  const Instance inst = gen_theory({2.0, 5.0, 1.0, 1.0, 2});
  const DistanceOracle o(inst.graph);
  const auto r = nn_two_agents(o, 1, 1, inst.targets);
  CHECK(r.total_cost == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(visited_targets(r.plan, inst.targets) == inst.targets);
}

TEST_CASE("best pair needs two targets") {
  const DistanceOracle o(line(3));
  CHECK_THROWS_AS(best_target_pair(o, 0, 2, {1}), InputError);
}

TEST_CASE("best pair is the brute-force minimum") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 9;
    const DistanceOracle o(testsupport::random_graph(rng, n, n / 2));
    const NodeSet targets = testsupport::random_targets(rng, n, 2 + trial % 4);
    const NodeId a1 = rng() % n, a2 = rng() % n;
    const auto pair = best_target_pair(o, a1, a2, targets);
    CHECK(pair.first != pair.second);
    Cost best = std::numeric_limits<Cost>::infinity();
    for (NodeId t1 : targets)
      for (NodeId t2 : targets)
        if (t1 != t2) best = std::min(best, o.dist(a1, t1) + o.dist(a2, t2));
    CHECK(pair.sum == best);
    CHECK(o.dist(a1, pair.first) + o.dist(a2, pair.second) == best);
  }
}

TEST_CASE("planners produce valid plans that cover all targets") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 12;
    const auto g = testsupport::random_graph(rng, n, n / 2);
    const DistanceOracle o(g);
    const NodeSet targets = testsupport::random_targets(rng, n, 1 + trial % 5);
    const NodeId a1 = rng() % n, a2 = rng() % n;

    const auto one = nn_single(o, a1, targets);
    CHECK_NOTHROW(validate_plan(g, one.plan));
    CHECK(visited_targets(one.plan, targets) == targets);
    CHECK(one.total_cost == doctest::Approx(testsupport::path_weight(g, one.plan.path1)));

    const auto two = nn_two_agents(o, a1, a2, targets);
    CHECK_NOTHROW(validate_plan(g, two.plan));
    CHECK(visited_targets(two.plan, targets) == targets);
    CHECK(two.total_cost == evaluate_cost(g, two.plan));

    // The first move of each agent heads for its assigned target.
    NodeSet open;
    for (NodeId t : targets)
      if (t != a1 && t != a2) open.push_back(t);
    if (open.size() >= 2 && two.plan.horizon() > 0) {
      const auto pair = best_target_pair(o, a1, a2, open);
      CHECK(two.plan.path1[1] == o.next_hop(a1, pair.first));
      CHECK(two.plan.path2[1] == o.next_hop(a2, pair.second));
    }
  }
}
