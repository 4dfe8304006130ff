#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecollab/model.hpp"

namespace linecollab::oracle {

/// Raised when a brute-force routine is asked for more clients than its cap
/// or for a variant it cannot certify.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kDefaultGridCap = 4;

/// Greedy schedule for a fixed service order: every client is met at the
/// earliest point the server and the client can both reach
/// (kinematics::earliest_meeting) and the server returns straight home.
///
/// For v <= 1 this is optimal for the order under either objective: the
/// earliest meeting point lies in the unit-slope cone of every other feasible
/// meeting point of the same client, so it dominates them for everything that
/// follows. For r = 0 the result is wait-free and colliding by construction.
/// Returns nullopt when a deadline is missed.
std::optional<Solution> schedule_sequence(const Instance& instance, const std::vector<std::string>& sequence);

/// Same as schedule_sequence but with stationary clients (v ignored): the
/// server visits each client at s and waits for its release.
std::optional<Solution> schedule_stationary(const Instance& instance, const std::vector<std::string>& sequence);

struct EnumerationResult {
  std::optional<Solution> best;       // nullopt when no order is feasible
  std::size_t sequences_evaluated = 0;
};

/// Minimum over all n! orders of schedule_sequence, ties broken by the
/// lexicographically smallest order of instance indices. Requires slow
/// clients (v < 1) and n <= cap. The objective FeasibilityOnly returns the
/// first feasible order found.
EnumerationResult best_by_enumeration(const Instance& instance, Objective objective,
                                      std::size_t cap = kDefaultEnumerationCap);

/// Optimum of the classical (non-collaborative) problem on the same data, by
/// enumerating orders with schedule_stationary.
EnumerationResult best_stationary_by_enumeration(const Instance& instance, Objective objective,
                                                 std::size_t cap = kDefaultEnumerationCap);

struct GridBracket {
  Rational lower;
  Rational upper;
  Solution witness;
  std::size_t candidate_positions = 0;
};

/// Grid search for the makespan that does not rely on greedy meetings.
///
/// Every rendezvous is placed on a candidate position: the multiples of
/// `resolution` inside the positional envelope plus the event points of the
/// instance (origin, starts, and the deadline reach of every client, also
/// shifted by deadline gaps). For each position the earliest meeting time is
/// used; server states are merged per subset of served clients with a
/// one-dimensional distance transform, so the search is exact over the
/// candidate set. `upper` is the best value found and
/// lower = upper - n (1 + v) resolution.
///
/// Works for any speed, makespan or feasibility objective, n <= cap.
/// Returns nullopt when no candidate schedule is feasible.
std::optional<GridBracket> best_by_grid(const Instance& instance, Objective objective, const Rational& resolution,
                                        std::size_t cap = kDefaultGridCap);

}  // namespace linecollab::oracle
