#include <doctest.h>

#include <sstream>

#include "modroute/bench.hpp"
#include "modroute/router.hpp"

using namespace modroute;

TEST_CASE("bench rows are deterministic and ordered") {
  BenchOptions opt;
  opt.trials = 6;
  opt.seed = 40;
  opt.jobs = 3;
  const auto a = run_bench(opt);
  opt.jobs = 1;
  const auto b = run_bench(opt);
  REQUIRE(a.size() == 6);
  CHECK(bench_csv(a) == bench_csv(b));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].seed == 40 + i);

  opt.trials = 1;
  CHECK(bench_csv(run_bench(opt)) == bench_csv(run_bench(opt)));
}

TEST_CASE("bench costs match re-evaluated plans") {
  BenchOptions opt;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto rec = bench_one(seed, opt);
    ClusteredGenParams p;
    p.seed = seed;
    const Instance inst = gen_clustered(p);
    const auto r = route(inst);
    CHECK(rec.modular_cost == evaluate_cost(inst.graph, r.plan));
    const auto base = baseline_non_modular(inst);
    CHECK(rec.baseline_cost == evaluate_cost(inst.graph, base.plan, CostModel::independent));
    CHECK(rec.win == definitely_less(rec.modular_cost, rec.baseline_cost));
    CHECK_FALSE(rec.oracle_cost.has_value());
  }
}

TEST_CASE("oracle column on small instances") {
  BenchOptions opt;
  opt.trials = 3;
  opt.with_oracle = true;
  opt.gen.node_count = 12;
  opt.gen.target_count = 5;
  for (const auto& r : run_bench(opt)) {
    REQUIRE(r.oracle_cost.has_value());
    CHECK(*r.oracle_cost <= r.modular_cost + 1e-9);
  }
  // 18 nodes and 8 targets are still inside the guard
  opt.gen = {};
  opt.trials = 1;
  CHECK(run_bench(opt)[0].oracle_cost.has_value());
}

TEST_CASE("csv layout") {
  const std::vector<BenchRecord> rows{{1, 14.0, 16.0, 14.0, true}, {2, 3.5, 3.5, std::nullopt, false}};
  CHECK(bench_csv(rows) ==
        "seed,modular_cost,baseline_cost,oracle_cost,win\n"
        "1,14,16,14,1\n"
        "2,3.5,3.5,,0\n");
  CHECK(win_rate(rows) == 0.5);
  CHECK(win_rate({}) == 0.0);
  CHECK(format_cost(1.0 / 3.0) == "0.333333");
}

TEST_CASE("bench argument errors") {
  BenchOptions opt;
  opt.trials = 0;
  CHECK_THROWS_AS(run_bench(opt), InputError);
  opt.trials = 2;
  opt.gen.target_count = 40;
  CHECK_THROWS_AS(run_bench(opt), InputError);
}
