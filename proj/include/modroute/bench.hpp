#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modroute/decisions.hpp"
#include "modroute/instance_gen.hpp"

namespace modroute {

struct BenchRecord {
  std::uint64_t seed;
  Cost modular_cost;
  Cost baseline_cost;
  // Empty when not requested or when the instance exceeds the oracle guard.
  std::optional<Cost> oracle_cost;
  bool win;
};

struct BenchOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  double db_threshold = kDefaultDbThreshold;
  bool with_oracle = false;
  // Template for every trial; its seed field is overwritten per trial.
  ClusteredGenParams gen;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

BenchRecord bench_one(std::uint64_t seed, const BenchOptions& options);

// Trials for seeds seed..seed+trials-1, returned in seed order.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

double win_rate(const std::vector<BenchRecord>& records);

// "%.6g"
std::string format_cost(Cost c);

// Header "seed,modular_cost,baseline_cost,oracle_cost,win" plus one row per record.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace modroute
