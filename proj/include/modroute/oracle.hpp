#pragma once

#include "modroute/graph.hpp"
#include "modroute/instance.hpp"

namespace modroute {

inline constexpr int kOracleMaxTargets = 12;
inline constexpr int kOracleMaxNodes = 24;

class OracleGuardError : public InputError {
 public:
  using InputError::InputError;
};

struct OracleResult {
  Cost cost = 0.0;
  TimedPlan plan;
  std::size_t settled_states = 0;
};

// Exact minimum-cost synchronized plan for both modules.
//
// Least-cost search over (position1, position2, visited-target mask). Each step
// every module either stays or crosses one incident edge. With `modular`, two
// modules crossing the same edge in the same direction pay once. Throws
// OracleGuardError beyond kOracleMaxTargets targets or kOracleMaxNodes nodes.
OracleResult exact_optimal(const Instance& instance, bool modular);

bool within_oracle_guard(const Instance& instance);

}  // namespace modroute
