#include "linecollab/dispatch.hpp"

#include <stdexcept>

#include "linecollab/oracle.hpp"
#include "linecollab/repairman.hpp"
#include "linecollab/salesman.hpp"
#include "linecollab/validator.hpp"

namespace linecollab::dispatch {

namespace {

constexpr const char* kCiteOpenTrp = "open: sum of completion times in this setting is unresolved";
constexpr const char* kCiteOpenFastTrp =
    "open: unknown whether some optimal schedule keeps the server wait-free for fast clients";
constexpr const char* kCiteOpenReleaseTsp = "open: makespan with release dates and slow clients is unresolved";
constexpr const char* kCiteSittersEmbed =
    "binary NP-hard: slow-velocity embedding of the line repairman problem with release dates (Sitters 2004)";
constexpr const char* kCiteTsitsiklisEmbed =
    "binary NP-hard: slow-velocity embedding of the line TSP with release and processing times (Tsitsiklis 1992)";
constexpr const char* kCiteThreePartition =
    "strongly NP-hard: feasibility with deadlines and processing times, 3-Partition reduction";
constexpr const char* kCiteTsitsiklisWindows =
    "strongly NP-hard: slow-velocity embedding of line TSP feasibility with time windows (Tsitsiklis 1992)";

Row make(bool fast, Windows w, Processing p, Objective o) {
  Row row{fast, w, p, o, CellStatus::Polynomial, std::nullopt, ""};
  const bool zero = p == Processing::Zero;
  const bool feas = o == Objective::FeasibilityOnly;
  const bool sum = o == Objective::SumCompletion;
  auto solved = [&](Method m) {
    row.status = feas && (w == Windows::None || w == Windows::ReleaseOnly) ? CellStatus::Trivial
                                                                             : CellStatus::Polynomial;
    row.method = m;
  };
  auto hard = [&](CellStatus s, const char* cite) {
    row.status = s;
    row.citation = cite;
  };

  if (!zero && (w == Windows::DeadlineOnly || w == Windows::TimeWindows)) {
    hard(CellStatus::StronglyNpHard, kCiteThreePartition);
    return row;
  }
  if (fast) {
    if (sum) {
      hard(CellStatus::Open, kCiteOpenFastTrp);
    } else if (w == Windows::None || w == Windows::ReleaseOnly) {
      solved(Method::Thm2);
    } else {
      solved(Method::Thm3);
    }
    return row;
  }
  switch (w) {
    case Windows::None:
      if (sum) {
        if (zero) {
          solved(Method::Dp3);
        } else {
          hard(CellStatus::Open, kCiteOpenTrp);
        }
      } else {
        solved(zero ? Method::Thm1 : Method::Dp2);
      }
      break;
    case Windows::ReleaseOnly:
      if (feas) {
        solved(Method::Greedy);
      } else if (sum) {
        hard(CellStatus::NpHard, kCiteSittersEmbed);
      } else if (zero) {
        hard(CellStatus::Open, kCiteOpenReleaseTsp);
      } else {
        hard(CellStatus::NpHard, kCiteTsitsiklisEmbed);
      }
      break;
    case Windows::DeadlineOnly:
      solved(sum ? Method::Dp3 : Method::Dp1);
      break;
    case Windows::TimeWindows:
      hard(CellStatus::StronglyNpHard, kCiteTsitsiklisWindows);
      break;
  }
  return row;
}

bool no_deadline(Windows w) { return w == Windows::None || w == Windows::ReleaseOnly; }

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Thm1: return "thm1";
    case Method::Thm2: return "thm2";
    case Method::Thm3: return "thm3";
    case Method::Dp1: return "dp1";
    case Method::Dp2: return "dp2";
    case Method::Dp3: return "dp3";
    case Method::Oracle: return "oracle";
    case Method::Grid: return "grid";
    case Method::Greedy: return "greedy";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  for (Method m : {Method::Auto, Method::Thm1, Method::Thm2, Method::Thm3, Method::Dp1, Method::Dp2, Method::Dp3,
                   Method::Oracle, Method::Grid, Method::Greedy}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Polynomial: return "polynomial";
    case CellStatus::Trivial: return "trivial";
    case CellStatus::Open: return "open";
    case CellStatus::NpHard: return "binary-np-hard";
    case CellStatus::StronglyNpHard: return "strongly-np-hard";
  }
  return "?";
}

const std::vector<Row>& table() {
  static const std::vector<Row> rows = [] {
    std::vector<Row> out;
    for (bool fast : {false, true}) {
      for (Windows w : {Windows::None, Windows::ReleaseOnly, Windows::DeadlineOnly, Windows::TimeWindows}) {
        for (Processing p : {Processing::Zero, Processing::General}) {
          for (Objective o : {Objective::FeasibilityOnly, Objective::Makespan, Objective::SumCompletion}) {
            out.push_back(make(fast, w, p, o));
          }
        }
      }
    }
    return out;
  }();
  return rows;
}

const Row& lookup(const VariantSignature& sig) {
  for (const Row& row : table()) {
    if (row.fast == sig.fast_like() && row.windows == sig.windows && row.processing == sig.processing &&
        row.objective == sig.objective) {
      return row;
    }
  }
  throw std::logic_error("dispatch table has no row for " + to_string(sig));
}

bool accepts(Method method, const VariantSignature& sig) {
  const bool slow = !sig.fast_like();
  const bool zero = sig.processing == Processing::Zero;
  const bool sum = sig.objective == Objective::SumCompletion;
  const bool no_windows = sig.windows == Windows::None;
  const bool deadlines_only = no_windows || sig.windows == Windows::DeadlineOnly;
  switch (method) {
    case Method::Auto: return true;
    case Method::Thm1: return slow && no_windows && zero && !sum;
    case Method::Thm2: return !slow && no_deadline(sig.windows) && !sum;
    case Method::Thm3: return !slow && zero && !sum;
    case Method::Dp1: return slow && deadlines_only && zero && !sum;
    case Method::Dp2: return slow && no_windows && !sum;
    case Method::Dp3: return slow && deadlines_only && zero && sum;
    case Method::Oracle: return slow;
    case Method::Grid: return !sum;
    case Method::Greedy: return no_deadline(sig.windows) && sig.objective == Objective::FeasibilityOnly;
  }
  return false;
}

std::string required_cell(Method method) {
  switch (method) {
    case Method::Auto: return "any";
    case Method::Thm1: return "slow clients, no time windows, zero processing, makespan";
    case Method::Thm2: return "fast or unit clients, release dates at most, makespan";
    case Method::Thm3: return "fast or unit clients, zero processing, makespan";
    case Method::Dp1: return "slow clients, deadlines at most, zero processing, makespan";
    case Method::Dp2: return "slow clients, no time windows, makespan";
    case Method::Dp3: return "slow clients, deadlines at most, zero processing, sum of completions";
    case Method::Oracle: return "slow clients";
    case Method::Grid: return "makespan or feasibility";
    case Method::Greedy: return "no deadlines, feasibility";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Solved: return "solved";
    case Status::Infeasible: return "infeasible";
    case Status::Open: return "open-problem";
    case Status::NpHard: return "np-hard";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Solved: return 0;
    case Status::Infeasible: return 2;
    case Status::Open: return 3;
    case Status::NpHard: return 4;
  }
  return 1;
}

Outcome solve(const Instance& instance, const SolveOptions& options) {
  Outcome out;
  out.variant = classify(instance, options.objective);
  out.method = options.method;
  if (options.method == Method::Auto) {
    const Row& row = lookup(out.variant);
    out.citation = row.citation;
    if (row.status == CellStatus::Open) {
      out.status = Status::Open;
      return out;
    }
    if (row.status == CellStatus::NpHard || row.status == CellStatus::StronglyNpHard) {
      out.status = Status::NpHard;
      return out;
    }
    out.method = *row.method;
  } else if (!accepts(options.method, out.variant)) {
    throw VariantMismatch("method " + to_string(options.method) + " requires " + required_cell(options.method) +
                          "; instance is " + to_string(out.variant));
  }

  const Objective objective = options.objective;
  switch (out.method) {
    case Method::Thm1:
      out.solution = salesman::solve_slow_zero_unconstrained(instance);
      break;
    case Method::Thm2:
      out.solution = salesman::solve_fast_release_general(instance);
      break;
    case Method::Thm3:
      out.solution = salesman::solve_fast_timewindow_zero(instance).solution;
      break;
    case Method::Dp1: {
      auto r = salesman::solve_dp_deadlines_zero_slow(instance);
      out.solution = std::move(r.solution);
      out.states_explored = r.states_explored;
      break;
    }
    case Method::Dp2: {
      auto r = salesman::solve_dp_unconstrained_general_slow(instance);
      out.solution = std::move(r.solution);
      out.states_explored = r.states_explored;
      break;
    }
    case Method::Dp3: {
      repairman::TrpOptions trp;
      trp.dominance = options.trp_dominance;
      auto r = repairman::solve_trp_dp(instance, trp);
      out.solution = std::move(r.solution);
      out.states_explored = r.states_explored;
      out.t_bound = r.t_bound;
      out.max_t = r.max_t;
      out.states_above_bound = r.states_above_bound;
      break;
    }
    case Method::Oracle: {
      auto r = oracle::best_by_enumeration(instance, objective, options.cap.value_or(oracle::kDefaultEnumerationCap));
      out.solution = std::move(r.best);
      out.states_explored = r.sequences_evaluated;
      break;
    }
    case Method::Grid: {
      auto r = oracle::best_by_grid(instance, objective, options.resolution,
                                    options.cap.value_or(oracle::kDefaultGridCap));
      if (r) {
        out.solution = std::move(r->witness);
        out.lower = r->lower;
        out.upper = r->upper;
        out.states_explored = r->candidate_positions;
      }
      break;
    }
    case Method::Greedy: {
      std::vector<std::string> order;
      for (const Client& a : instance.clients()) order.push_back(a.id);
      out.solution = oracle::schedule_sequence(instance, order);
      break;
    }
    case Method::Auto:
      throw std::logic_error("unresolved method");
  }

  if (!out.solution) {
    out.status = Status::Infeasible;
    return out;
  }
  const auto obj = validator::objectives(instance, *out.solution);
  out.c_max = obj.c_max;
  out.c_sum = obj.c_sum;
  out.status = Status::Solved;
  return out;
}

}  // namespace linecollab::dispatch
