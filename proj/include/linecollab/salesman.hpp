#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "linecollab/model.hpp"

namespace linecollab::salesman {

/// (i, j, d): the first i left and j right clients are handled, the latest
/// direct rendezvous was with l(i) (d = L) or r(j) (d = R). Indices are 1-based
/// counts into SideSplit::left / right.
struct DpState {
  std::size_t i = 0;
  std::size_t j = 0;
  Side d = Side::L;

  auto operator<=>(const DpState&) const = default;
};

struct DpCell {
  std::optional<Rational> value;  // nullopt = +infinity
  std::optional<DpState> predecessor;
};

/// Dense (nL+1) x (nR+1) x 2 table.
class DpTable {
 public:
  DpTable() = default;
  DpTable(std::size_t n_left, std::size_t n_right)
      : n_left_(n_left), n_right_(n_right), cells_((n_left + 1) * (n_right + 1) * 2) {}

  std::size_t n_left() const { return n_left_; }
  std::size_t n_right() const { return n_right_; }
  DpCell& at(const DpState& s) { return cells_[index(s)]; }
  const DpCell& at(const DpState& s) const { return cells_[index(s)]; }

 private:
  std::size_t index(const DpState& s) const {
    return ((s.i * (n_right_ + 1)) + s.j) * 2 + (s.d == Side::L ? 0 : 1);
  }

  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::vector<DpCell> cells_;
};

/// Positions the server can occupy at d(client) in some feasible trajectory.
struct ReachableInterval {
  std::string client_id;
  Rational y_min;
  Rational y_max;
  Rational x_min;
  Rational x_max;

  bool empty() const { return x_min > x_max; }
  bool contains_origin() const { return x_min.sign() <= 0 && x_max.sign() >= 0; }
};

/// Pendulum for slow clients, zero processing, no time windows. The side of
/// the farthest client goes first (exact ties: right first), clients are met
/// head-on in distance order, then the other side. Optimal makespan.
Solution solve_slow_zero_unconstrained(const Instance& instance);

/// Fast or unit clients, no deadlines, any processing. Everyone is served at
/// the origin in order of origin arrival (ties by id), each as soon as both
/// the client is there and the previous processing is done.
Solution solve_fast_release_general(const Instance& instance);

struct TimeWindowResult {
  std::optional<Solution> solution;          // nullopt = infeasible
  std::vector<ReachableInterval> intervals;  // deadline order, finite deadlines only
  Rational c;                                // travel part
  Rational c_prime;                          // latest origin arrival
};

/// Fast or unit clients, zero processing, any windows. Intervals are
/// propagated in deadline order; the witness walks the chain backward from
/// the endpoint nearest the origin of the last interval that excludes it and
/// serves everyone later at the origin.
TimeWindowResult solve_fast_timewindow_zero(const Instance& instance);

struct DpResult {
  std::optional<Solution> solution;  // nullopt = infeasible
  DpTable table;
  std::size_t states_explored = 0;
  std::optional<Rational> terminal;  // optimal makespan
};

/// Algorithm for slow clients, zero processing, deadlines (or none). Fills
/// the table in lexicographic order over the two predecessors of each state.
/// states_explored counts every state whose value is evaluated.
DpResult solve_dp_deadlines_zero_slow(const Instance& instance);

struct Cascade {
  std::size_t served_left = 0;   // i''
  std::size_t served_right = 0;  // j''
  Rational busy_until;           // T(S')
  std::vector<Rendezvous> absorbed;
};

/// Absorbs clients that reach `position` while the server is busy there.
/// `served_left` / `served_right` count the clients already handled. The next
/// unserved client of either side is absorbed while its colliding arrival at
/// `position` is <= busy_until (exact ties: left first); each absorbed client
/// is met at the current busy_until, which then grows by its processing time.
/// Release dates are taken as zero. When both sides are waiting and `last`
/// (the meeting just completed) would be tied in time with the preferred
/// side's client at a different distance, the other side is taken first.
Cascade busy_cascade(const Instance& instance, const SideSplit& sides, const Rational& position,
                     const Rational& busy_until, std::size_t served_left, std::size_t served_right,
                     std::optional<Rendezvous> last = std::nullopt);

/// Algorithm for slow clients, general processing, no time windows. Table
/// values are direct (wait-free) rendezvous times; `terminal` is the best
/// makespan over all states whose cascade absorbs every remaining client.
DpResult solve_dp_unconstrained_general_slow(const Instance& instance);

}  // namespace linecollab::salesman
