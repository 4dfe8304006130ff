#include <doctest.h>

#include <algorithm>
#include <random>

#include "linecollab/generate.hpp"
#include "linecollab/oracle.hpp"
#include "linecollab/validator.hpp"

using namespace linecollab;
using namespace linecollab::validator;

namespace {

Solution single(const Instance& inst, Rational t, Rational x, Rational ret) {
  Solution s;
  s.sequence = {inst.clients()[0].id};
  s.rendezvous = {make_rendezvous(inst.clients()[0], t, x)};
  s.return_time = ret;
  return s;
}

std::vector<ViolationKind> kinds(const Verdict& v) {
  std::vector<ViolationKind> out;
  for (const auto& x : v.violations) out.push_back(x.kind);
  return out;
}

}  // namespace

TEST_CASE("check_feasible examples") {
  const Instance inst(1, {{"a", 2, 0, std::nullopt, 0}});
  CHECK(check_feasible(inst, single(inst, 1, 1, 2)).ok());
  CHECK(kinds(check_feasible(inst, single(inst, 1, Rational(3, 2), 3))) ==
        std::vector<ViolationKind>{ViolationKind::ServerUnreachable});

  const Instance due(1, {{"a", 2, 0, Rational(1), 0}});
  const auto late = check_feasible(due, single(due, 2, 1, 3));
  REQUIRE(late.violations.size() == 1);
  CHECK(late.violations[0].kind == ViolationKind::AfterDeadline);
  CHECK(late.violations[0].client_id == "a");

  // Every violation is collected in order.
  const Instance rel(Rational(1, 2), {{"a", 4, 3, Rational(4), 0}});
  const auto many = check_feasible(rel, single(rel, 1, 4, 1));
  CHECK(kinds(many) == std::vector<ViolationKind>{ViolationKind::ServerUnreachable, ViolationKind::ClientUnreachable,
                                                  ViolationKind::BeforeRelease, ViolationKind::ReturnUnreachable});
}

TEST_CASE("structure errors") {
  const Instance inst(1, {{"a", 2, 0, std::nullopt, 0}, {"b", 1, 0, std::nullopt, 0}});
  Solution s = single(inst, 1, 1, 2);
  CHECK_THROWS_AS(check_structure(inst, s), ModelError);
  s.sequence = {"a", "a"};
  s.rendezvous.push_back(s.rendezvous[0]);
  CHECK_THROWS_AS(check_feasible(inst, s), ModelError);
}

TEST_CASE("objectives") {
  const Instance inst(1, {{"a", 1, 0, std::nullopt, 0}, {"b", 2, 0, std::nullopt, 0}});
  Solution s;
  s.sequence = {"a", "b"};
  s.rendezvous = {make_rendezvous(inst.client("a"), 1, 0), make_rendezvous(inst.client("b"), 2, 0)};
  s.return_time = 3;
  CHECK(objectives(inst, s).c_max == Rational(3));
  CHECK(objectives(inst, s).c_sum == Rational(3));
  CHECK(objectives(Instance(1, {}), Solution{}).c_max == Rational(0));
  CHECK(objectives(Instance(1, {}), Solution{}).c_sum == Rational(0));
  const Instance one(1, {{"a", 0, 0, std::nullopt, 2}});
  const auto o = objectives(one, single(one, 1, 0, 4));
  CHECK(o.c_sum == Rational(3));
  CHECK(o.c_max == Rational(4));
}

TEST_CASE("order preservation") {
  const Instance inst(Rational(1, 2), {{"a", -1, 0, std::nullopt, 0}, {"b", -2, 0, std::nullopt, 0}});
  Solution s;
  s.sequence = {"a", "b"};
  s.rendezvous = {make_rendezvous(inst.client("a"), 1, 0), make_rendezvous(inst.client("b"), 2, 0)};
  CHECK(is_order_preserving(inst, s));
  s.sequence = {"b", "a"};
  s.rendezvous = {make_rendezvous(inst.client("b"), 1, 0), make_rendezvous(inst.client("a"), 2, 0)};
  CHECK_FALSE(is_order_preserving(inst, s));
  const Instance one(Rational(1, 2), {{"a", -1, 0, std::nullopt, 0}});
  CHECK(is_order_preserving(one, single(one, 1, 0, 1)));
}

TEST_CASE("wait-free") {
  const Instance inst(1, {{"a", 2, 0, std::nullopt, 0}});
  CHECK(is_wait_free(inst, single(inst, 1, 1, 2)));
  CHECK_FALSE(is_wait_free(inst, single(inst, 1, 1, 3)));
  CHECK_FALSE(is_wait_free(inst, single(inst, 2, 1, 3)));
  CHECK(is_wait_free(Instance(1, {}), Solution{}));
}

TEST_CASE("colliding") {
  const Instance inst(Rational(1, 2), {{"a", 2, 0, std::nullopt, 0}, {"b", 1, 0, std::nullopt, 0}});
  // a arrives at 1 after 2 time units.
  Solution s;
  s.sequence = {"a"};
  CHECK(is_colliding(Instance(Rational(1, 2), {inst.client("a")}), single(Instance(Rational(1, 2), {inst.client("a")}), 2, 1, 3)));
  // b waits at 1/2 (arrived at 1) and is met when the server is free at 3.
  s.sequence = {"a", "b"};
  s.rendezvous = {make_rendezvous(inst.client("a"), 3, Rational(1, 2)),
                  make_rendezvous(inst.client("b"), 3, Rational(1, 2))};
  s.return_time = Rational(7, 2);
  CHECK(is_colliding(inst, s));
  // Later than both branches.
  s.rendezvous[1] = make_rendezvous(inst.client("b"), 4, Rational(1, 2));
  CHECK_FALSE(is_colliding(inst, s));
}

TEST_CASE("normalize removes waiting") {
  const Instance inst(Rational(1, 2), {{"a", 3, 0, Rational(10), 0}, {"b", -2, 0, Rational(20), 0}});
  Solution s;
  s.sequence = {"a", "b"};
  s.rendezvous = {make_rendezvous(inst.client("a"), 3, Rational(3, 2)),
                  make_rendezvous(inst.client("b"), 8, Rational(-1, 2))};
  s.return_time = 9;
  REQUIRE(check_feasible(inst, s).ok());
  const Solution n = normalize(inst, s, Objective::Makespan);
  CHECK(is_wait_free(inst, n));
  CHECK(is_colliding(inst, n));
  CHECK(n.return_time <= s.return_time);
  // Best over the same sequence.
  CHECK(n == *oracle::schedule_sequence(inst, s.sequence));
  CHECK(normalize(inst, n, Objective::Makespan) == n);
}

TEST_CASE("normalize restores distance order") {
  const Instance inst(Rational(1, 2), {{"near", 2, 0, std::nullopt, 0}, {"far", 6, 0, std::nullopt, 0}});
  const auto bad = oracle::schedule_sequence(inst, {"far", "near"});
  REQUIRE(bad);
  REQUIRE_FALSE(is_order_preserving(inst, *bad));
  const Solution n = normalize(inst, *bad, Objective::Makespan);
  CHECK(is_order_preserving(inst, n));
  CHECK(n.return_time <= bad->return_time);
  CHECK(n.return_time == oracle::best_by_enumeration(inst, Objective::Makespan).best->return_time);
  const Solution sum = normalize(inst, *bad, Objective::SumCompletion);
  CHECK(objectives(inst, sum).c_sum <= objectives(inst, *bad).c_sum);
}

TEST_CASE("normalize separates simultaneous meetings") {
  const Instance inst(Rational(7, 10), {{"c1", Rational(-7, 2), 0, std::nullopt, Rational(9, 2)},
                                        {"c2", -3, 0, std::nullopt, 5},
                                        {"c3", 7, 0, std::nullopt, Rational(3, 2)},
                                        {"c4", Rational(-9, 2), 0, std::nullopt, 0},
                                        {"c5", -5, 0, std::nullopt, 4},
                                        {"c6", 4, 0, std::nullopt, 1}});
  const auto tied = oracle::schedule_sequence(inst, {"c2", "c1", "c4", "c5", "c6", "c3"});
  REQUIRE(tied);
  REQUIRE(tied->rendezvous[2].t == tied->rendezvous[3].t);
  REQUIRE_FALSE(is_order_preserving(inst, *tied));
  const Solution n = normalize(inst, *tied, Objective::Makespan);
  CHECK(is_order_preserving(inst, n));
  CHECK(n.return_time == tied->return_time);
}

TEST_CASE("normalize preconditions") {
  const Instance fast(2, {{"a", 2, 0, std::nullopt, 0}});
  CHECK_THROWS_AS(normalize(fast, single(fast, Rational(2, 3), Rational(2, 3), Rational(4, 3)), Objective::Makespan),
                  NormalizeError);
  const Instance rel(Rational(1, 2), {{"a", 2, 1, std::nullopt, 0}});
  CHECK_THROWS_AS(normalize(rel, single(rel, 2, 2, 4), Objective::Makespan), NormalizeError);
  const Instance proc(Rational(1, 2), {{"a", 3, 0, std::nullopt, 1}});
  CHECK_THROWS_AS(normalize(proc, single(proc, 2, 2, 5), Objective::SumCompletion), NormalizeError);
  const Instance ok(Rational(1, 2), {{"a", 3, 0, std::nullopt, 0}});
  CHECK_THROWS_AS(normalize(ok, single(ok, 1, 1, 2), Objective::Makespan), NormalizeError);
}

TEST_CASE("greedy schedules are wait-free and colliding") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    generate::Spec spec;
    spec.windows = Windows::DeadlineOnly;
    spec.n = 1 + seed % 6;
    spec.seed = seed;
    const Instance inst = generate::generate(spec);
    std::vector<std::string> seq;
    for (const auto& c : inst.clients()) seq.push_back(c.id);
    std::shuffle(seq.begin(), seq.end(), rng);
    const auto sol = oracle::schedule_sequence(inst, seq);
    if (!sol) continue;
    CHECK(check_feasible(inst, *sol).ok());
    CHECK(is_wait_free(inst, *sol));
    CHECK(is_colliding(inst, *sol));
  }
}
