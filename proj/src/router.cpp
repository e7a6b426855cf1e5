#include "modroute/router.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>

#include <nlohmann/json.hpp>

#include "modroute/planners.hpp"

namespace modroute {

std::string_view to_string(EventKind kind) { return kind == EventKind::join ? "join" : "split"; }

namespace {

class Router {
 public:
  Router(const Instance& instance, const DistanceOracle& oracle, const RouteOptions& options)
      : oracle_(oracle),
        options_(options),
        m1_(instance.module1),
        m2_(instance.module2),
        joined_(instance.start_joined),
        remaining_(instance.targets) {
    result_.plan.path1.push_back(m1_);
    result_.plan.path2.push_back(m2_);
    result_.joined.push_back(joined_);
    std::erase(remaining_, m1_);
    std::erase(remaining_, m2_);
  }

  RouteResult run() && {
    while (!remaining_.empty()) {
      if (joined_) {
        split();
      } else {
        separated();
      }
    }
    result_.total_cost = evaluate_cost(oracle_.graph(), result_.plan, CostModel::modular);
    return std::move(result_);
  }

 private:
  std::size_t now() const { return result_.plan.path1.size() - 1; }

  void step(NodeId n1, NodeId n2) {
    m1_ = n1;
    m2_ = n2;
    result_.plan.path1.push_back(n1);
    result_.plan.path2.push_back(n2);
    result_.joined.push_back(joined_);
    const auto before = remaining_.size();
    std::erase(remaining_, n1);
    std::erase(remaining_, n2);
    if (remaining_.size() < before) {
      stalled_steps_ = 0;
      visited_since_split_ = true;
    } else {
      ++stalled_steps_;
    }
  }

  void event(EventKind kind) {
    result_.events.push_back({now(), kind, m1_});
    result_.joined.back() = joined_;
  }

  // No join right after a split, and none before a target has been visited
  // since the last split, so join/split cannot cycle without progress.
  bool join_allowed() const { return !last_split_ && visited_since_split_; }

  void split() {
    const SplitDecision sd = split_node(oracle_, m1_, remaining_, options_.db_threshold);
    for (std::size_t r = 1; r <= sd.split_index && !remaining_.empty(); ++r) {
      step(sd.agent_path[r], sd.agent_path[r]);
    }
    joined_ = false;
    last_split_ = true;
    visited_since_split_ = false;
    if (!remaining_.empty()) event(EventKind::split);
  }

  void join(NodeId node) {
    while ((m1_ != node || m2_ != node) && !remaining_.empty()) {
      step(m1_ == node ? m1_ : oracle_.next_hop(m1_, node),
           m2_ == node ? m2_ : oracle_.next_hop(m2_, node));
    }
    last_split_ = false;
    if (remaining_.empty()) return;
    joined_ = true;
    event(EventKind::join);
  }

  struct SeparatedPlans {
    PlannerResult solo1;
    PlannerResult solo2;
    std::optional<PlannerResult> both;
    // Predicted cost per option (1: module 1 alone, 2: module 2 alone, 3: both).
    std::array<Cost, 3> cost;
  };

  SeparatedPlans separated_plans() const {
    SeparatedPlans p{nn_single(oracle_, m1_, remaining_), nn_single(oracle_, m2_, remaining_),
                     std::nullopt, {}};
    p.cost = {p.solo1.total_cost, p.solo2.total_cost, std::numeric_limits<Cost>::infinity()};
    if (remaining_.size() >= 2) {
      p.both = nn_two_agents(oracle_, m1_, m2_, remaining_);
      p.cost[2] = evaluate_cost(oracle_.graph(), p.both->plan, CostModel::independent);
    }
    return p;
  }

  void separated() {
    const SeparatedPlans plans = separated_plans();
    if (join_allowed()) {
      const JoinDecision jd = join_decision(oracle_, m1_, m2_, remaining_);
      if (jd.should_join) {
        // Only join when walking to the join node and then splitting is predicted
        // to beat every way of continuing apart.
        const Cost joined = jd.d_between +
            split_node(oracle_, *jd.join_node, remaining_, options_.db_threshold).predicted_cost;
        if (definitely_less(joined, *std::min_element(plans.cost.begin(), plans.cost.end()))) {
          join(*jd.join_node);
          return;
        }
      }
    }
    advance(plans);
  }

  // Moves one step along the cheapest separated option; ties favour module 1
  // alone, then module 2 alone.
  void advance(const SeparatedPlans& plans) {
    int choice = 0;
    // Re-planning every step can in principle keep switching between plans
    // without reaching a target; after that many idle steps, stick with the
    // two-agent plan, whose best-pair distance strictly decreases.
    if (plans.both && stalled_steps_ >= static_cast<std::size_t>(oracle_.node_count())) {
      choice = 2;
    } else {
      for (int i = 1; i < 3; ++i) {
        if (definitely_less(plans.cost[i], plans.cost[choice])) choice = i;
      }
    }

    switch (choice) {
      case 0:
        step(plans.solo1.plan.path1[1], m2_);
        break;
      case 1:
        step(m1_, plans.solo2.plan.path1[1]);
        break;
      default:
        step(plans.both->plan.path1[1], plans.both->plan.path2[1]);
        break;
    }
    last_split_ = false;
  }

  const DistanceOracle& oracle_;
  RouteOptions options_;
  NodeId m1_;
  NodeId m2_;
  bool joined_;
  bool last_split_ = false;
  bool visited_since_split_ = true;
  std::size_t stalled_steps_ = 0;
  NodeSet remaining_;
  RouteResult result_;
};

}  // namespace

RouteResult route(const Instance& instance, const RouteOptions& options) {
  const DistanceOracle oracle(instance.graph);
  return route(instance, oracle, options);
}

RouteResult route(const Instance& instance, const DistanceOracle& oracle,
                  const RouteOptions& options) {
  return Router(instance, oracle, options).run();
}

RouteResult baseline_non_modular(const Instance& instance) {
  const DistanceOracle oracle(instance.graph);
  return baseline_non_modular(instance, oracle);
}

RouteResult baseline_non_modular(const Instance& instance, const DistanceOracle& oracle) {
  const NodeId m1 = instance.module1, m2 = instance.module2;
  NodeSet remaining = instance.targets;
  std::erase(remaining, m1);
  std::erase(remaining, m2);

  RouteResult best;
  best.plan = {{m1}, {m2}};
  if (!remaining.empty()) {
    TimedPlan solo1 = nn_single(oracle, m1, remaining).plan;
    solo1.path2.assign(solo1.path1.size(), m2);

    TimedPlan solo2;
    solo2.path2 = nn_single(oracle, m2, remaining).plan.path1;
    solo2.path1.assign(solo2.path2.size(), m1);

    std::vector<TimedPlan> options{std::move(solo1), std::move(solo2)};
    if (remaining.size() >= 2) options.push_back(nn_two_agents(oracle, m1, m2, remaining).plan);

    bool first = true;
    for (auto& plan : options) {
      const Cost c = evaluate_cost(oracle.graph(), plan, CostModel::independent);
      if (first || definitely_less(c, best.total_cost)) {
        best.plan = std::move(plan);
        best.total_cost = c;
        first = false;
      }
    }
  }
  best.joined.assign(best.plan.path1.size(), false);
  return best;
}

nlohmann::json route_trace(const RouteResult& result) {
  using nlohmann::json;
  json steps = json::array();
  std::size_t next_event = 0;
  for (std::size_t t = 0; t < result.plan.path1.size(); ++t) {
    json ev = nullptr;
    while (next_event < result.events.size() && result.events[next_event].time == t) {
      ev = std::string(to_string(result.events[next_event].kind));
      ++next_event;
    }
    steps.push_back({{"t", t},
                     {"m1", result.plan.path1[t]},
                     {"m2", result.plan.path2[t]},
                     {"joined", static_cast<bool>(result.joined[t])},
                     {"event", ev}});
  }
  json events = json::array();
  for (const auto& e : result.events) {
    events.push_back({{"t", e.time}, {"kind", std::string(to_string(e.kind))}, {"node", e.node}});
  }
  return json{{"steps", std::move(steps)}, {"events", std::move(events)}, {"cost", result.total_cost}};
}

}  // namespace modroute
