#pragma once

#include <cstddef>
#include <optional>

#include "linecollab/model.hpp"

namespace linecollab::repairman {

/// Server travel length along the order that alternates between the sides
/// (left first, each side by distance) until one side runs out.
Rational t_bound(const Instance& instance);

struct TrpOptions {
  /// Drop a label (t, D) of state (i, j, d) when another label of the same
  /// state has t' <= t and a served sum D' - (n-i-j)t' <= D - (n-i-j)t.
  bool dominance = true;
  /// Discard states with t > t_bound. Off by default: the bound does not hold
  /// for every instance with deadlines.
  bool truncate_at_t_bound = false;
};

struct TrpResult {
  std::optional<Solution> solution;  // nullopt = infeasible
  std::optional<Rational> value;     // minimal sum of completion times
  Rational t_bound;
  Rational max_t;                      // largest t among explored states
  std::size_t states_explored = 0;     // expanded (i, j, d, t) labels
  std::size_t states_above_bound = 0;  // explored states with t > t_bound
};

/// Forward dynamic program over (i, j, d, t) for slow clients, zero
/// processing, deadlines (or none), minimizing the sum of completion times.
/// D carries the served completions plus the latest time charged to every
/// client still waiting, so each step adds (n - i - j + 1)(t - t').
TrpResult solve_trp_dp(const Instance& instance, const TrpOptions& options = {});

}  // namespace linecollab::repairman
