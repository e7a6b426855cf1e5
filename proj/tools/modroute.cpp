// modroute: generate instances, route two modular agents, compare against the
// non-modular baseline and the exact oracle, and run batch experiments.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modroute/bench.hpp"
#include "modroute/instance.hpp"
#include "modroute/instance_gen.hpp"
#include "modroute/oracle.hpp"
#include "modroute/router.hpp"

namespace {

using nlohmann::json;
using namespace modroute;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string events_string(const RouteResult& r) {
  std::string s;
  for (const auto& e : r.events) {
    if (!s.empty()) s += ' ';
    s += std::string(to_string(e.kind)) + "@" + std::to_string(e.node);
  }
  return s.empty() ? "none" : s;
}

struct SolveArgs {
  std::string instance;
  double dt = kDefaultDbThreshold;
  std::string trace;
  std::string format = "text";
  bool baseline = false;
};

int run_solve(const SolveArgs& a) {
  const Instance inst = load_instance(a.instance);
  const DistanceOracle oracle(inst.graph);
  const RouteResult r = route(inst, oracle, RouteOptions{a.dt});
  std::optional<RouteResult> base;
  if (a.baseline) base = baseline_non_modular(inst, oracle);

  if (!a.trace.empty()) write_text(a.trace, route_trace(r).dump(2) + "\n");
  if (a.format == "json") {
    json out = route_trace(r);
    out.erase("steps");
    if (base) out["baseline_cost"] = base->total_cost;
    std::cout << out.dump() << '\n';
  } else if (a.format == "csv") {
    std::cout << "cost,events" << (base ? ",baseline_cost" : "") << '\n'
              << format_cost(r.total_cost) << ',' << events_string(r);
    if (base) std::cout << ',' << format_cost(base->total_cost);
    std::cout << '\n';
  } else {
    std::cout << "cost " << format_cost(r.total_cost) << '\n' << "events " << events_string(r) << '\n';
    if (base) std::cout << "baseline " << format_cost(base->total_cost) << '\n';
  }
  return 0;
}

struct OracleArgs {
  std::string instance;
  bool non_modular = false;
  std::string trace;
  std::string format = "text";
};

int run_oracle(const OracleArgs& a) {
  const Instance inst = load_instance(a.instance);
  const OracleResult r = exact_optimal(inst, !a.non_modular);
  if (!a.trace.empty()) {
    RouteResult as_route{r.plan, r.cost, {}, std::vector<bool>(r.plan.path1.size(), false)};
    write_text(a.trace, route_trace(as_route).dump(2) + "\n");
  }
  if (a.format == "json") {
    std::cout << json{{"cost", r.cost}, {"modular", !a.non_modular}}.dump() << '\n';
  } else if (a.format == "csv") {
    std::cout << "cost,modular\n" << format_cost(r.cost) << ',' << (a.non_modular ? 0 : 1) << '\n';
  } else {
    std::cout << "cost " << format_cost(r.cost) << '\n';
  }
  return 0;
}

struct GenArgs {
  std::string kind = "clustered";
  std::uint64_t seed = 1;
  ClusteredGenParams clustered;
  TheoryGenParams theory;
  std::string out;
};

int run_gen(GenArgs a) {
  Instance inst = [&] {
    if (a.kind == "theory") return gen_theory(a.theory);
    a.clustered.seed = a.seed;
    return gen_clustered(a.clustered);
  }();
  write_text(a.out, instance_to_json(inst).dump(2) + "\n");
  return 0;
}

struct BenchArgs {
  BenchOptions options;
  std::string out;
  std::string format = "csv";
};

int run_bench_cmd(const BenchArgs& a) {
  const auto records = run_bench(a.options);
  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"seed", r.seed},
                      {"modular_cost", r.modular_cost},
                      {"baseline_cost", r.baseline_cost},
                      {"oracle_cost", r.oracle_cost ? json(*r.oracle_cost) : json(nullptr)},
                      {"win", r.win}});
    }
    if (!a.out.empty()) write_text(a.out, rows.dump(2) + "\n");
  } else if (!a.out.empty()) {
    write_text(a.out, bench_csv(records));
  }
  const auto wins = static_cast<int>(win_rate(records) * static_cast<double>(records.size()) + 0.5);
  std::cout << "win rate " << wins << "/" << records.size() << " (" << format_cost(win_rate(records))
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing of two modular agents on weighted graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Route an instance with the joining/splitting heuristic");
  solve_cmd->add_option("--instance,instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--dt", solve.dt, "DB-index threshold for the cluster filter")->capture_default_str();
  solve_cmd->add_option("--trace", solve.trace, "Write the per-step trace JSON here");
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"text", "json", "csv"}));
  solve_cmd->add_flag("--baseline", solve.baseline, "Also report the non-modular baseline cost");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum on small instances");
  oracle_cmd->add_option("--instance,instance", oracle.instance, "Instance JSON file")->required();
  oracle_cmd->add_flag("--non-modular", oracle.non_modular, "No shared-edge discount");
  oracle_cmd->add_option("--trace", oracle.trace, "Write the optimal plan trace JSON here");
  oracle_cmd->add_option("--format", oracle.format)->check(CLI::IsMember({"text", "json", "csv"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", gen.kind)->check(CLI::IsMember({"clustered", "theory"}))->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--nodes", gen.clustered.node_count)->capture_default_str();
  gen_cmd->add_option("--targets", gen.clustered.target_count)->capture_default_str();
  gen_cmd->add_option("--clusters", gen.clustered.cluster_count)->capture_default_str();
  gen_cmd->add_option("--alpha", gen.theory.alpha)->capture_default_str();
  gen_cmd->add_option("--lambda", gen.theory.lambda)->capture_default_str();
  gen_cmd->add_option("--beta1", gen.theory.beta1)->capture_default_str();
  gen_cmd->add_option("--beta2", gen.theory.beta2)->capture_default_str();
  gen_cmd->add_option("--cluster-size", gen.theory.cluster_size)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Batch comparison on clustered instances");
  bench_cmd->add_option("--trials", bench.options.trials)->capture_default_str();
  bench_cmd->add_option("--seed", bench.options.seed)->capture_default_str();
  bench_cmd->add_option("--dt", bench.options.db_threshold)->capture_default_str();
  bench_cmd->add_flag("--with-oracle", bench.options.with_oracle, "Also solve each instance exactly");
  bench_cmd->add_option("--nodes", bench.options.gen.node_count)->capture_default_str();
  bench_cmd->add_option("--targets", bench.options.gen.target_count)->capture_default_str();
  bench_cmd->add_option("--clusters", bench.options.gen.cluster_count)->capture_default_str();
  bench_cmd->add_option("--jobs", bench.options.jobs, "Worker threads (0 = all cores)");
  bench_cmd->add_option("--out", bench.out, "Results file");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*oracle_cmd) return run_oracle(oracle);
    if (*gen_cmd) return run_gen(gen);
    if (*bench_cmd) return run_bench_cmd(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
