#include <doctest.h>

#include "linecollab/generate.hpp"
#include "linecollab/oracle.hpp"
#include "linecollab/salesman.hpp"
#include "linecollab/validator.hpp"

using namespace linecollab;
using namespace linecollab::salesman;

namespace {

Instance random_slow(Windows w, Processing p, std::size_t n, std::uint64_t seed) {
  generate::Spec s;
  s.windows = w;
  s.processing = p;
  s.n = n;
  s.seed = seed;
  if (w == Windows::DeadlineOnly) {
    s.deadline_min = 3;
    s.deadline_max = 30;
  }
  return generate::generate(s);
}

Rational makespan(const std::optional<Solution>& s) { return s->return_time; }

}  // namespace

TEST_CASE("pendulum examples") {
  const Instance one(Rational(1, 2), {{"r", 3, 0, std::nullopt, 0}});
  const Solution s = solve_slow_zero_unconstrained(one);
  CHECK(s.rendezvous[0].t == Rational(2));
  CHECK(s.rendezvous[0].x == Rational(2));
  CHECK(s.return_time == Rational(4));

  // Farthest client on the right: right first, then the closed forms
  // t' = (2 s(r) - (1+v) s(l)) / (1+v)^2, x' = (2 v s(r) + (1+v) s(l)) / (1+v)^2.
  const Rational v(1, 2);
  const Instance two(v, {{"l", -1, 0, std::nullopt, 0}, {"r", 2, 0, std::nullopt, 0}});
  const Solution p = solve_slow_zero_unconstrained(two);
  REQUIRE(p.sequence == std::vector<std::string>{"r", "l"});
  const Rational one_v = Rational(1) + v;
  const Rational t_l = (Rational(4) + one_v) / (one_v * one_v);
  const Rational x_l = (Rational(2) * v * 2 - one_v) / (one_v * one_v);
  CHECK(p.rendezvous[0].t == Rational(2) / one_v);
  CHECK(p.rendezvous[1].t == t_l);
  CHECK(p.rendezvous[1].x == x_l);
  CHECK(p.return_time == t_l + x_l.abs());
  CHECK(p.return_time == Rational(8, 3));

  // Symmetric: both orders tie, the right side goes first.
  const Instance sym(v, {{"l", -3, 0, std::nullopt, 0}, {"r", 3, 0, std::nullopt, 0}});
  const Solution q = solve_slow_zero_unconstrained(sym);
  CHECK(q.sequence.front() == "r");
  CHECK(q.return_time == oracle::schedule_sequence(sym, {"l", "r"})->return_time);
}

TEST_CASE("pendulum matches enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = random_slow(Windows::None, Processing::Zero, 1 + seed % 6, seed);
    const Solution s = solve_slow_zero_unconstrained(inst);
    CHECK(validator::check_feasible(inst, s).ok());
    CHECK(s.return_time == makespan(oracle::best_by_enumeration(inst, Objective::Makespan).best));
  }
  CHECK_THROWS_AS(solve_slow_zero_unconstrained(Instance(2, {{"a", 1, 0, std::nullopt, 0}})), VariantMismatch);
}

TEST_CASE("origin service for fast clients") {
  const Instance two(2, {{"a", 2, 0, std::nullopt, 1}, {"b", 0, 0, std::nullopt, 1}});
  const Solution s = solve_fast_release_general(two);
  CHECK(s.sequence == std::vector<std::string>{"b", "a"});
  CHECK(s.rendezvous[1].completion == Rational(2));
  CHECK(s.return_time == Rational(2));
  const auto g = oracle::best_by_grid(two, Objective::Makespan, Rational(1, 64));
  REQUIRE(g);
  CHECK(g->lower <= s.return_time);
  CHECK(s.return_time <= g->upper);

  CHECK(solve_fast_release_general(Instance(2, {{"a", 0, 0, std::nullopt, 5}})).return_time == Rational(5));
  const Instance zero(3, {{"a", 0, 0, std::nullopt, 2}, {"b", 0, 0, std::nullopt, 3}, {"c", 0, 0, std::nullopt, 4}});
  CHECK(solve_fast_release_general(zero).return_time == Rational(9));
  CHECK_THROWS_AS(solve_fast_release_general(Instance(Rational(1, 2), {{"a", 1, 0, std::nullopt, 0}})),
                  VariantMismatch);
}

TEST_CASE("time windows for fast clients") {
  const auto a = solve_fast_timewindow_zero(Instance(1, {{"a", 1, 0, Rational(1), 0}}));
  REQUIRE(a.solution);
  CHECK(a.intervals[0].y_min == Rational(0));
  CHECK(a.intervals[0].y_max == Rational(2));
  CHECK(a.intervals[0].x_min == Rational(0));
  CHECK(a.intervals[0].x_max == Rational(1));
  CHECK(a.c == Rational(0));
  CHECK(a.c_prime == Rational(1));
  CHECK(a.solution->return_time == Rational(1));

  const auto b = solve_fast_timewindow_zero(Instance(1, {{"a", 5, 0, Rational(1), 0}}));
  CHECK_FALSE(b.solution);
  CHECK(b.intervals[0].empty());

  // The second interval [2, 4] excludes the origin: C = 4 + 2.
  const Instance nested(1, {{"a", 3, 0, Rational(2), 0}, {"b", 6, 0, Rational(4), 0}});
  const auto c = solve_fast_timewindow_zero(nested);
  REQUIRE(c.solution);
  CHECK(c.intervals[1].x_min == Rational(2));
  CHECK(c.intervals[1].x_max == Rational(4));
  CHECK(c.c == Rational(6));
  CHECK(c.solution->return_time == Rational(6));
  CHECK(validator::check_feasible(nested, *c.solution).ok());
  const auto g = oracle::best_by_grid(nested, Objective::Makespan, Rational(1, 64));
  REQUIRE(g);
  CHECK(g->lower <= Rational(6));
  CHECK(Rational(6) <= g->upper);
}

TEST_CASE("deadline program") {
  const Instance one(Rational(1, 2), {{"r", 2, 0, Rational(10), 0}});
  const auto r = solve_dp_deadlines_zero_slow(one);
  REQUIRE(r.solution);
  CHECK(r.solution->rendezvous[0].t == Rational(4, 3));
  CHECK(*r.terminal == Rational(8, 3));

  const Instance two(Rational(1, 2), {{"l", -3, 0, Rational(10), 0}, {"r", 2, 0, Rational(10), 0}});
  const auto t = solve_dp_deadlines_zero_slow(two);
  CHECK(*t.table.at({1, 0, Side::L}).value == Rational(3) / Rational(3, 2));
  CHECK(*t.table.at({0, 1, Side::R}).value == Rational(2) / Rational(3, 2));

  CHECK_FALSE(solve_dp_deadlines_zero_slow(Instance(Rational(1, 2), {{"r", 3, 0, Rational(1), 0}})).solution);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = random_slow(Windows::DeadlineOnly, Processing::Zero, 1 + seed % 7, seed);
    const auto dp = solve_dp_deadlines_zero_slow(inst);
    const auto ref = oracle::best_by_enumeration(inst, Objective::Makespan);
    const auto sides = split_sides(inst);
    CHECK(dp.states_explored <= 2 * (sides.left.size() + 1) * (sides.right.size() + 1));
    REQUIRE(dp.solution.has_value() == ref.best.has_value());
    if (!dp.solution) continue;
    CHECK(dp.solution->return_time == ref.best->return_time);
    CHECK(validator::is_order_preserving(inst, *dp.solution));
    CHECK(validator::is_wait_free(inst, *dp.solution));
    CHECK(validator::is_colliding(inst, *dp.solution));
  }
}

TEST_CASE("busy cascade") {
  const Rational v(1, 2);
  const Instance inst(v, {{"r1", 1, 0, std::nullopt, 3}, {"r2", 2, 0, std::nullopt, 1}, {"l1", -4, 0, std::nullopt, 0}});
  const auto sides = split_sides(inst);
  // Nobody reaches the origin by time 1.
  const auto none = busy_cascade(inst, sides, 0, 1, 0, 0);
  CHECK(none.served_left == 0);
  CHECK(none.served_right == 0);
  CHECK(none.busy_until == Rational(1));
  // r1 arrives exactly at 2 and is absorbed; its processing keeps the server
  // busy until 5, long enough for r2 (arrival 4) but not for l1 (arrival 8).
  const auto chain = busy_cascade(inst, sides, 0, 2, 0, 0);
  CHECK(chain.served_right == 2);
  CHECK(chain.served_left == 0);
  CHECK(chain.busy_until == Rational(6));
  REQUIRE(chain.absorbed.size() == 2);
  CHECK(chain.absorbed[0].t == Rational(2));
  CHECK(chain.absorbed[1].t == Rational(5));
}

TEST_CASE("busy cascade avoids simultaneous same-side meetings") {
  const Instance inst(Rational(1, 2), {{"a", -1, 0, std::nullopt, 0}, {"b", -2, 0, std::nullopt, 1},
                                       {"c", 2, 0, std::nullopt, 1}});
  const auto sides = split_sides(inst);
  const auto plain = busy_cascade(inst, sides, 0, 4, 1, 0);
  REQUIRE(plain.absorbed.size() == 2);
  CHECK(plain.absorbed[0].client_id == "b");
  const auto after_a = busy_cascade(inst, sides, 0, 4, 1, 0, make_rendezvous(inst.client("a"), 4, 0));
  REQUIRE(after_a.absorbed.size() == 2);
  CHECK(after_a.absorbed[0].client_id == "c");
  CHECK(after_a.busy_until == plain.busy_until);
}

TEST_CASE("general processing program breaks zero-processing ties") {
  const Instance inst(Rational(7, 10), {{"c1", Rational(-7, 2), 0, std::nullopt, Rational(9, 2)},
                                        {"c2", -3, 0, std::nullopt, 5},
                                        {"c3", 7, 0, std::nullopt, Rational(3, 2)},
                                        {"c4", Rational(-9, 2), 0, std::nullopt, 0},
                                        {"c5", -5, 0, std::nullopt, 4},
                                        {"c6", 4, 0, std::nullopt, 1}});
  const auto dp = solve_dp_unconstrained_general_slow(inst);
  REQUIRE(dp.solution);
  CHECK(dp.solution->return_time == Rational(332, 17));
  CHECK(validator::is_order_preserving(inst, *dp.solution));
}

TEST_CASE("general processing program") {
  // The right client arrives while the left one is processed.
  const Rational v(1, 2);
  const Instance inst(v, {{"l", -1, 0, std::nullopt, 10}, {"r", 2, 0, std::nullopt, 1}});
  const auto r = solve_dp_unconstrained_general_slow(inst);
  CHECK(*r.table.at({1, 0, Side::L}).value == Rational(2, 3));
  REQUIRE(r.solution);
  CHECK(r.solution->sequence == std::vector<std::string>{"l", "r"});
  CHECK(r.solution->rendezvous[1].t == Rational(32, 3));
  CHECK(r.solution->return_time == Rational(37, 3));
  CHECK(r.solution->return_time == oracle::best_by_enumeration(inst, Objective::Makespan).best->return_time);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance g = random_slow(Windows::None, Processing::General, 1 + seed % 6, seed);
    const auto dp = solve_dp_unconstrained_general_slow(g);
    REQUIRE(dp.solution);
    CHECK(validator::check_feasible(g, *dp.solution).ok());
    CHECK(dp.solution->return_time == oracle::best_by_enumeration(g, Objective::Makespan).best->return_time);
    const Instance z = random_slow(Windows::None, Processing::Zero, 1 + seed % 6, seed);
    CHECK(solve_dp_unconstrained_general_slow(z).solution->return_time ==
          solve_slow_zero_unconstrained(z).return_time);
  }
}

TEST_CASE("deadline program values dominate every order-preserving schedule") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = random_slow(Windows::DeadlineOnly, Processing::Zero, 1 + seed % 6, seed);
    const auto dp = solve_dp_deadlines_zero_slow(inst);
    const auto sides = split_sides(inst);
    // Merge the two side orders in every possible way.
    const std::size_t n = inst.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != sides.left.size()) continue;
      std::vector<std::string> seq;
      std::size_t i = 0;
      std::size_t j = 0;
      for (std::size_t k = 0; k < n; ++k) seq.push_back((mask >> k) & 1 ? sides.left[i++].id : sides.right[j++].id);
      const auto sol = oracle::schedule_sequence(inst, seq);
      if (!sol) continue;
      i = 0;
      j = 0;
      for (const auto& rv : sol->rendezvous) {
        const bool left = side_of(inst.client(rv.client_id)) == Side::L;
        left ? ++i : ++j;
        const auto& cell = dp.table.at({i, j, left ? Side::L : Side::R});
        REQUIRE(cell.value.has_value());
        CHECK(*cell.value <= rv.t);
      }
    }
  }
}
