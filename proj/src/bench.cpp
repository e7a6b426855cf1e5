#include "modroute/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "modroute/oracle.hpp"
#include "modroute/router.hpp"

namespace modroute {

BenchRecord bench_one(std::uint64_t seed, const BenchOptions& options) {
  ClusteredGenParams params = options.gen;
  params.seed = seed;
  const Instance instance = gen_clustered(params);
  const DistanceOracle oracle(instance.graph);

  const RouteResult modular = route(instance, oracle, RouteOptions{options.db_threshold});
  const RouteResult baseline = baseline_non_modular(instance, oracle);

  BenchRecord record{seed, modular.total_cost, baseline.total_cost, std::nullopt,
                     definitely_less(modular.total_cost, baseline.total_cost)};
  if (options.with_oracle && within_oracle_guard(instance)) {
    record.oracle_cost = exact_optimal(instance, true).cost;
  }
  return record;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.trials < 1) throw InputError("bench: trials must be at least 1");
  const auto trials = static_cast<std::size_t>(options.trials);
  std::vector<std::optional<BenchRecord>> slots(trials);

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(trials));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        slots[i] = bench_one(options.seed + i, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRecord> records;
  records.reserve(trials);
  for (auto& slot : slots) records.push_back(*slot);
  return records;
}

double win_rate(const std::vector<BenchRecord>& records) {
  if (records.empty()) return 0.0;
  const auto wins = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.win; });
  return static_cast<double>(wins) / static_cast<double>(records.size());
}

std::string format_cost(Cost c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", c);
  return buf;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "seed,modular_cost,baseline_cost,oracle_cost,win\n";
  for (const auto& r : records) {
    out << r.seed << ',' << format_cost(r.modular_cost) << ',' << format_cost(r.baseline_cost) << ','
        << (r.oracle_cost ? format_cost(*r.oracle_cost) : "") << ',' << (r.win ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace modroute
