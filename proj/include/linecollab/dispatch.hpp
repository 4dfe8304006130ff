#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linecollab/model.hpp"

namespace linecollab::dispatch {

enum class Method { Auto, Thm1, Thm2, Thm3, Dp1, Dp2, Dp3, Oracle, Grid, Greedy };

std::string to_string(Method m);
/// Accepts the CLI tokens auto|thm1|thm2|thm3|dp1|dp2|dp3|oracle|grid|greedy.
Method parse_method(std::string_view s);

enum class CellStatus { Polynomial, Trivial, Open, NpHard, StronglyNpHard };

std::string to_string(CellStatus s);

/// One cell of the complexity landscape. `method` is set for Polynomial and
/// Trivial cells; Trivial cells name a routine that returns some feasible
/// solution.
struct Row {
  bool fast;  // fast or unit clients
  Windows windows;
  Processing processing;
  Objective objective;
  CellStatus status;
  std::optional<Method> method;
  std::string citation;
};

/// Every (speed class, windows, processing, objective) combination, 48 rows.
const std::vector<Row>& table();

/// Row for the signature (speed and objective included).
const Row& lookup(const VariantSignature& sig);

/// True when `method` can solve instances of `sig` with the given objective.
bool accepts(Method method, const VariantSignature& sig);

/// Human-readable name of the cell a method requires.
std::string required_cell(Method method);

enum class Status { Solved, Infeasible, Open, NpHard };

/// solved, infeasible, open-problem, np-hard.
std::string to_string(Status s);

/// 0 solved, 2 infeasible, 3 open, 4 np-hard.
int exit_code(Status s);

struct SolveOptions {
  Method method = Method::Auto;
  Objective objective = Objective::Makespan;
  Rational resolution = Rational(1, 64);  // grid step
  std::optional<std::size_t> cap;         // oracle cap override
  bool trp_dominance = true;
};

struct Outcome {
  Status status = Status::Solved;
  VariantSignature variant;
  Method method = Method::Auto;  // routine actually run
  std::optional<Solution> solution;
  Rational c_max;
  Rational c_sum;
  std::size_t states_explored = 0;
  std::string citation;  // hard or open cells
  // Grid bracket.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  // Repairman program statistics.
  std::optional<Rational> t_bound;
  std::optional<Rational> max_t;
  std::optional<std::size_t> states_above_bound;
};

/// Classifies, picks the routine (or checks the requested one) and runs it.
/// Explicit methods outside their cell throw VariantMismatch; oracle caps
/// throw oracle::OracleError.
Outcome solve(const Instance& instance, const SolveOptions& options);

}  // namespace linecollab::dispatch
