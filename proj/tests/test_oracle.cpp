#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "modroute/instance_gen.hpp"
#include "modroute/oracle.hpp"
#include "modroute/router.hpp"
#include "test_support.hpp"

using namespace modroute;
using testsupport::line;

TEST_CASE("theory instance optimum") {
  const Instance inst = gen_theory({2.0, 5.0, 1.0, 1.0, 2});
  const auto mod = exact_optimal(inst, true);
  CHECK(mod.cost == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(evaluate_cost(inst.graph, mod.plan) == doctest::Approx(mod.cost));
  CHECK(visited_targets(mod.plan, inst.targets) == inst.targets);

  const auto ind = exact_optimal(inst, false);
  CHECK(ind.cost == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(evaluate_cost(inst.graph, ind.plan, CostModel::independent) == doctest::Approx(ind.cost));
}

TEST_CASE("target under a module costs nothing") {
  const Instance inst = make_instance(line(3), 1, 2, {1});
  CHECK(exact_optimal(inst, true).cost == 0.0);
  CHECK(exact_optimal(inst, false).cost == 0.0);
}

TEST_CASE("guard") {
  CHECK_THROWS_AS(exact_optimal(make_instance(line(kOracleMaxNodes + 1), 0, 0, {1}), true),
                  OracleGuardError);
  std::vector<NodeId> many;
  for (int i = 0; i <= kOracleMaxTargets; ++i) many.push_back(i);
  const Instance wide = make_instance(line(kOracleMaxTargets + 1), 0, 0, many);
  CHECK_FALSE(within_oracle_guard(wide));
  CHECK_THROWS_AS(exact_optimal(wide, true), OracleGuardError);
}

TEST_CASE("optimum bounds both heuristics") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 9;
    const auto g = testsupport::random_graph(rng, n, n / 2);
    const NodeId m1 = rng() % n;
    const NodeId m2 = trial % 4 == 0 ? m1 : static_cast<NodeId>(rng() % n);
    const Instance inst = make_instance(g, m1, m2, testsupport::random_targets(rng, n, 1 + trial % 4));
    const auto mod = exact_optimal(inst, true);
    const auto ind = exact_optimal(inst, false);
    CHECK(mod.cost <= ind.cost + 1e-9);
    CHECK(mod.cost <= route(inst).total_cost + 1e-9);
    CHECK(ind.cost <= baseline_non_modular(inst).total_cost + 1e-9);
    CHECK(visited_targets(mod.plan, inst.targets) == inst.targets);
    CHECK_NOTHROW(validate_plan(g, mod.plan));
  }
}

TEST_CASE("relabelling nodes does not change the optimum") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const auto g = testsupport::random_graph(rng, n, 2);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});

    const NodeId m1 = rng() % n, m2 = rng() % n;
    const NodeSet targets = testsupport::random_targets(rng, n, 1 + trial % 4);
    std::vector<NodeId> moved;
    for (NodeId t : targets) moved.push_back(perm[t]);

    const Instance a = make_instance(g, m1, m2, targets);
    const Instance b = make_instance(WeightedGraph(n, edges), perm[m1], perm[m2], moved);
    for (bool modular : {true, false}) {
      CHECK(exact_optimal(a, modular).cost == doctest::Approx(exact_optimal(b, modular).cost));
    }
  }
}

TEST_CASE("co-located start without modularity: best over all splits of the visiting order") {
  // With both modules at s and no discount the optimum is the best way to
  // partition the targets into two open walks, each taken in its best order.
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 6;
    const auto g = testsupport::random_graph(rng, n, 3);
    const DistanceOracle o(g);
    const NodeId s = rng() % n;
    NodeSet targets = testsupport::random_targets(rng, n, 1 + trial % 5);
    const Instance inst = make_instance(g, s, s, targets);
    std::erase(targets, s);

    auto walk = [&](std::vector<NodeId> order) {
      Cost best = order.empty() ? 0.0 : std::numeric_limits<Cost>::infinity();
      std::sort(order.begin(), order.end());
      if (order.empty()) return best;
      do {
        Cost c = o.dist(s, order[0]);
        for (std::size_t i = 1; i < order.size(); ++i) c += o.dist(order[i - 1], order[i]);
        best = std::min(best, c);
      } while (std::next_permutation(order.begin(), order.end()));
      return best;
    };
    Cost best = std::numeric_limits<Cost>::infinity();
    const unsigned k = static_cast<unsigned>(targets.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<NodeId> left, right;
      for (unsigned i = 0; i < k; ++i) ((mask >> i) & 1u ? left : right).push_back(targets[i]);
      best = std::min(best, walk(left) + walk(right));
    }
    CHECK(exact_optimal(inst, false).cost == doctest::Approx(best));
    // a single walk over everything is one of the options for the modular case
    CHECK(exact_optimal(inst, true).cost <= walk(targets) + 1e-9);
  }
}
