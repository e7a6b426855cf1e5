#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "modroute/instance_gen.hpp"
#include "modroute/router.hpp"
#include "test_support.hpp"

using namespace modroute;
using testsupport::line;

namespace {

void check_route(const Instance& inst, const RouteResult& r) {
  const auto& g = inst.graph;
  REQUIRE_NOTHROW(validate_plan(g, r.plan));
  CHECK(visited_targets(r.plan, inst.targets) == inst.targets);
  CHECK(r.total_cost == evaluate_cost(g, r.plan));
  CHECK(r.joined.size() == r.plan.path1.size());
  for (std::size_t t = 0; t < r.plan.path1.size(); ++t) {
    if (r.joined[t]) CHECK(r.plan.path1[t] == r.plan.path2[t]);
  }
  for (std::size_t i = 0; i < r.events.size(); ++i) {
    const auto& e = r.events[i];
    CHECK(r.plan.path1[e.time] == e.node);
    CHECK(r.plan.path2[e.time] == e.node);
    if (i > 0) {
      CHECK(r.events[i - 1].kind != e.kind);
      // never a join straight after a split in the same place
      if (e.kind == EventKind::join) CHECK(r.events[i - 1].time < e.time);
    }
  }
}

}  // namespace

TEST_CASE("theory instance: split at the hub") {
  const Instance inst = gen_theory({2.0, 5.0, 1.0, 1.0, 2});
  const auto r = route(inst);
  check_route(inst, r);
  CHECK(r.total_cost == doctest::Approx(14.0).epsilon(1e-12));
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].kind == EventKind::split);
  CHECK(r.events[0].node == 1);
  CHECK(r.events[0].time == 1);

  const auto b = baseline_non_modular(inst);
  CHECK(b.total_cost == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("modules already on the targets") {
  const Instance inst = make_instance(line(3), 0, 2, {0, 2});
  const auto r = route(inst);
  CHECK(r.total_cost == 0.0);
  CHECK(r.events.empty());
  CHECK(r.plan.horizon() == 0);
}

TEST_CASE("a lone target is fetched by the nearer module") {
  const Instance inst = make_instance(line(5), 0, 2, {4});
  const auto r = route(inst);
  check_route(inst, r);
  CHECK(r.total_cost == 2.0);
  CHECK(r.events.empty());
  CHECK(r.plan.path1.back() == 0);
}

TEST_CASE("baseline examples") {
  // target 3 away from module 1, 7 away from module 2
  const Instance one = make_instance(line(11), 0, 10, {3});
  CHECK(baseline_non_modular(one).total_cost == 3.0);

  // modules at both ends, one target next to each
  const Instance two = make_instance(line(7), 0, 6, {1, 5});
  const auto b = baseline_non_modular(two);
  CHECK(b.total_cost == 2.0);
  CHECK(b.plan.path1.back() == 1);
  CHECK(b.plan.path2.back() == 5);
}

TEST_CASE("trace layout") {
  const Instance inst = gen_theory({2.0, 5.0, 1.0, 1.0, 2});
  const auto r = route(inst);
  const auto j = route_trace(r);
  REQUIRE(j["steps"].size() == r.plan.path1.size());
  CHECK(j["steps"][0]["joined"] == true);
  CHECK(j["steps"][1]["event"] == "split");
  CHECK(j["steps"][1]["joined"] == false);
  CHECK(j["events"][0]["node"] == 1);
  CHECK(j["cost"].get<double>() == doctest::Approx(14.0));
}

TEST_CASE("random instances: valid plans, progress, no worse than walking alone") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 14;
    const auto g = testsupport::random_graph(rng, n, n / 2);
    const NodeId m1 = rng() % n;
    const bool joined = trial % 3 == 0;
    const NodeId m2 = joined ? m1 : static_cast<NodeId>(rng() % n);
    std::vector<NodeId> targets = testsupport::random_targets(rng, n, 1 + trial % 5);
    const Instance inst = make_instance(g, m1, m2, targets, joined);
    const DistanceOracle o(inst.graph);
    const auto r = route(inst, o);
    check_route(inst, r);
    CHECK(r.events.size() <= 2 * inst.targets.size() + 1);

    // some target is reached within every window of node_count idle steps
    // (plus the walk to a join node and along a split path)
    NodeSet open = inst.targets;
    std::erase(open, m1);
    std::erase(open, m2);
    std::size_t last_visit = 0;
    for (std::size_t t = 1; t < r.plan.path1.size(); ++t) {
      const auto before = open.size();
      std::erase(open, r.plan.path1[t]);
      std::erase(open, r.plan.path2[t]);
      if (open.size() < before) last_visit = t;
      CHECK(t - last_visit <= static_cast<std::size_t>(3 * n));
    }

    const auto b = baseline_non_modular(inst, o);
    CHECK(visited_targets(b.plan, inst.targets) == inst.targets);
    CHECK(b.total_cost == doctest::Approx(evaluate_cost(g, b.plan, CostModel::independent)));
  }
}

TEST_CASE("threshold changes keep plans valid") {
  const auto inst = gen_clustered({});
  for (double dt : {0.0, 0.2, 0.4, 1.0, 100.0}) {
    const auto r = route(inst, RouteOptions{dt});
    check_route(inst, r);
  }
}
