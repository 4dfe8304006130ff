#include <doctest.h>

#include "linecollab/generate.hpp"
#include "linecollab/oracle.hpp"
#include "linecollab/repairman.hpp"
#include "linecollab/validator.hpp"

using namespace linecollab;
using namespace linecollab::repairman;

namespace {

Instance at(std::vector<long> positions) {
  std::vector<Client> c;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    c.push_back({"c" + std::to_string(k + 1), positions[k], 0, Rational(100), 0});
  }
  return Instance(Rational(1, 2), c);
}

}  // namespace

TEST_CASE("travel bound") {
  CHECK(t_bound(at({-1, 2})) == Rational(4));
  CHECK(t_bound(at({3})) == Rational(3));
  CHECK(t_bound(at({-1, -2, 3})) == Rational(10));
  CHECK(t_bound(at({-1, -2, 3})) <= Rational(12));
}

TEST_CASE("repairman examples") {
  const Instance one(Rational(1, 2), {{"r", 2, 0, Rational(10), 0}});
  const auto r = solve_trp_dp(one);
  REQUIRE(r.value);
  CHECK(*r.value == Rational(4, 3));

  const Instance two(Rational(1, 2), {{"l", -1, 0, Rational(20), 0}, {"r", 2, 0, Rational(20), 0}});
  const auto t = solve_trp_dp(two);
  const auto lr = oracle::schedule_sequence(two, {"l", "r"});
  const auto rl = oracle::schedule_sequence(two, {"r", "l"});
  const Rational best = min(validator::objectives(two, *lr).c_sum, validator::objectives(two, *rl).c_sum);
  CHECK(*t.value == best);
  CHECK(*t.value == validator::objectives(two, *oracle::best_by_enumeration(two, Objective::SumCompletion).best).c_sum);

  CHECK_FALSE(solve_trp_dp(Instance(Rational(1, 2), {{"r", 3, 0, Rational(1), 0}})).solution);
  CHECK_THROWS_AS(solve_trp_dp(Instance(2, {{"r", 3, 0, Rational(1), 0}})), VariantMismatch);
}

TEST_CASE("repairman matches enumeration with and without dominance") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    generate::Spec s;
    s.windows = seed % 3 == 0 ? Windows::None : Windows::DeadlineOnly;
    s.n = 1 + seed % 7;
    s.seed = seed;
    if (s.windows == Windows::DeadlineOnly) {
      s.deadline_min = 3;
      s.deadline_max = 30;
    }
    const Instance inst = generate::generate(s);
    const auto pruned = solve_trp_dp(inst);
    const auto full = solve_trp_dp(inst, TrpOptions{false, false});
    const auto ref = oracle::best_by_enumeration(inst, Objective::SumCompletion);
    REQUIRE(pruned.solution.has_value() == ref.best.has_value());
    REQUIRE(full.solution.has_value() == ref.best.has_value());
    CHECK(pruned.states_explored <= full.states_explored);
    if (!ref.best) continue;
    const Rational want = validator::objectives(inst, *ref.best).c_sum;
    CHECK(*pruned.value == want);
    CHECK(*full.value == want);
    CHECK(validator::objectives(inst, *pruned.solution).c_sum == *pruned.value);
    CHECK(validator::check_feasible(inst, *pruned.solution).ok());
    CHECK(validator::is_order_preserving(inst, *pruned.solution));
    CHECK(validator::is_wait_free(inst, *pruned.solution));
    CHECK(validator::is_colliding(inst, *pruned.solution));
  }
}

TEST_CASE("statistics") {
  const auto r = solve_trp_dp(at({-1, -10, 1}));
  CHECK(r.t_bound == Rational(14));
  CHECK(r.max_t > Rational(0));
  CHECK(r.states_explored > 0);
  const auto cut = solve_trp_dp(at({-1, -10, 1}), TrpOptions{true, true});
  CHECK(cut.states_above_bound == 0);
  CHECK(cut.max_t <= cut.t_bound);
}
