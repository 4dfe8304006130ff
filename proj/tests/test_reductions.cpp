#include <doctest.h>

#include "linecollab/oracle.hpp"
#include "linecollab/reductions.hpp"
#include "linecollab/validator.hpp"

using namespace linecollab;
using namespace linecollab::reductions;

TEST_CASE("3-Partition input guards") {
  CHECK_THROWS_AS(validate({2, 12, {2, 5, 5, 5, 5, 2}}), ReductionError);
  CHECK_THROWS_AS(validate({2, 10, {3, 3, 4, 3, 3, 5}}), ReductionError);
  CHECK_THROWS_AS(validate({2, 10, {3, 3, 4, 3, 3}}), ReductionError);
  CHECK_NOTHROW(validate({2, 10, {3, 3, 4, 3, 3, 4}}));
  CHECK_THROWS_AS(parse_three_partition("{\"m\": 2}"), ModelError);
  const auto in = parse_three_partition(R"({"m": 2, "B": 10, "items": [3, 3, 4, 3, 3, 4]})");
  CHECK(in.m == 2);
  CHECK(in.b == 10);
  CHECK(in.items.size() == 6);
}

TEST_CASE("3-Partition construction") {
  const Instance inst = reduce_3partition({2, 10, {3, 3, 4, 3, 3, 4}});
  REQUIRE(inst.size() == 7);
  CHECK(inst.v() == Rational(1, 2));
  const Client& q = inst.client("q1");
  CHECK(q.s == Rational(5));
  CHECK(*q.d == Rational(10));
  CHECK(q.tau == Rational(0));
  const Client& p = inst.client("p3");
  CHECK(p.s == Rational(0));
  CHECK(*p.d == Rational(20));
  CHECK(p.tau == Rational(4));
  // A yes-instance is feasible.
  const auto ref = oracle::best_by_enumeration(inst, Objective::FeasibilityOnly);
  REQUIRE(ref.best);
  CHECK(validator::check_feasible(inst, *ref.best).ok());
  CHECK_THROWS_AS(reduce_3partition({2, 10, {3, 3, 4, 3, 3, 4}}, Rational(0)), ReductionError);
  CHECK(reduce_3partition({3, 15, {4, 5, 6, 4, 5, 6, 4, 5, 6}}, Rational(1, 3)).client("q2").s == Rational(-10));
}

TEST_CASE("K bound") {
  CHECK(k_bound(Instance(1, {{"a", 3, 1, std::nullopt, 0}, {"b", -1, 0, std::nullopt, 2}})) == Rational(18));
  CHECK(k_bound(Instance(1, {{"a", 0, 0, std::nullopt, 0}})) == Rational(0));
  CHECK(k_bound(Instance(1, {{"a", 5, 0, std::nullopt, 0}})) == Rational(10));
}

TEST_CASE("slow embedding") {
  const Instance two(1, {{"a", 3, 1, std::nullopt, 0}, {"b", -1, 0, std::nullopt, 2}});
  CHECK(embed_slow(two, Objective::Makespan).v() == Rational(1, 37));
  CHECK(embed_slow(two, Objective::SumCompletion).v() == Rational(1, 55));
  CHECK(embed_slow(two, Objective::Makespan).clients() == two.clients());

  const Instance one(1, {{"a", 3, 0, std::nullopt, 0}});
  const Instance e = embed_slow(one, Objective::Makespan);
  const Rational f = oracle::best_stationary_by_enumeration(one, Objective::Makespan).best->return_time;
  const Rational fc = oracle::best_by_enumeration(e, Objective::Makespan).best->return_time;
  CHECK(f == Rational(6));
  CHECK(fc > Rational(5));
  CHECK(fc <= Rational(6));
}
