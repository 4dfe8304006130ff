#include "linecollab/validator.hpp"

#include <algorithm>
#include <unordered_set>

#include "linecollab/kinematics.hpp"
#include "linecollab/oracle.hpp"

namespace linecollab::validator {

using kinematics::ServerState;

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ServerUnreachable: return "server-unreachable";
    case ViolationKind::ClientUnreachable: return "client-unreachable";
    case ViolationKind::BeforeRelease: return "before-release";
    case ViolationKind::AfterDeadline: return "after-deadline";
    case ViolationKind::ReturnUnreachable: return "return-unreachable";
  }
  return "?";
}

void check_structure(const Instance& instance, const Solution& solution) {
  if (solution.sequence.size() != instance.size()) {
    throw ModelError(ModelErrorKind::Structure, "sequence has " + std::to_string(solution.sequence.size()) +
                                                    " entries for " + std::to_string(instance.size()) + " clients");
  }
  if (solution.rendezvous.size() != solution.sequence.size()) {
    throw ModelError(ModelErrorKind::Structure, "rendezvous list is not aligned with the sequence");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < solution.sequence.size(); ++i) {
    const auto& id = solution.sequence[i];
    if (!instance.index_of(id)) {
      throw ModelError(ModelErrorKind::Structure, "sequence names unknown client '" + id + "'");
    }
    if (!seen.insert(id).second) {
      throw ModelError(ModelErrorKind::Structure, "sequence serves client '" + id + "' twice");
    }
    if (solution.rendezvous[i].client_id != id) {
      throw ModelError(ModelErrorKind::Structure, "rendezvous " + std::to_string(i) + " is for '" +
                                                      solution.rendezvous[i].client_id + "', sequence says '" +
                                                      id + "'");
    }
  }
}

Verdict check_feasible(const Instance& instance, const Solution& solution) {
  check_structure(instance, solution);
  Verdict verdict;
  auto report = [&](ViolationKind kind, const std::string& id, std::string detail) {
    verdict.violations.push_back(Violation{kind, id, std::move(detail)});
  };
  ServerState prev{Rational(0), Rational(0)};
  for (const auto& rv : solution.rendezvous) {
    const Client& a = instance.client(rv.client_id);
    const Rational completion = rv.t + a.tau;
    if (!kinematics::reachable_by_server(prev, rv.t, rv.x)) {
      report(ViolationKind::ServerUnreachable, a.id,
             "server free at t=" + prev.t.str() + " x=" + prev.x.str() + " cannot reach x=" + rv.x.str() +
                 " by t=" + rv.t.str());
    }
    if (!kinematics::reachable_by_client(a, instance.v(), rv.t, rv.x)) {
      report(ViolationKind::ClientUnreachable, a.id,
             "client needs until t=" + (a.r + (rv.x - a.s).abs() / instance.v()).str() + " to reach x=" +
                 rv.x.str());
    }
    if (rv.t < a.r) {
      report(ViolationKind::BeforeRelease, a.id, "met at t=" + rv.t.str() + " before release " + a.r.str());
    }
    if (a.d && rv.t > *a.d) {
      report(ViolationKind::AfterDeadline, a.id, "met at t=" + rv.t.str() + " after deadline " + a.d->str());
    }
    prev = ServerState{completion, rv.x};
  }
  if (!kinematics::reachable_by_server(prev, solution.return_time, Rational(0))) {
    report(ViolationKind::ReturnUnreachable, "",
           "return at t=" + solution.return_time.str() + " but server needs until " +
               (prev.t + prev.x.abs()).str());
  }
  return verdict;
}

Objectives objectives(const Instance& instance, const Solution& solution) {
  Objectives out{solution.return_time, Rational(0)};
  for (const auto& rv : solution.rendezvous) out.c_sum += rv.t + instance.client(rv.client_id).tau;
  return out;
}

bool is_order_preserving(const Instance& instance, const Solution& solution) {
  struct Seen {
    Side side;
    Rational dist;
    Rational t;
  };
  std::vector<Seen> met;
  met.reserve(solution.rendezvous.size());
  for (const auto& rv : solution.rendezvous) {
    const Client& a = instance.client(rv.client_id);
    met.push_back(Seen{side_of(a), a.s.abs(), rv.t});
  }
  for (std::size_t i = 0; i < met.size(); ++i) {
    for (std::size_t j = 0; j < met.size(); ++j) {
      if (met[i].side != met[j].side || !(met[i].dist < met[j].dist)) continue;
      if (!(met[i].t < met[j].t)) return false;
    }
  }
  return true;
}

bool is_wait_free(const Instance& instance, const Solution& solution) {
  ServerState prev{Rational(0), Rational(0)};
  for (const auto& rv : solution.rendezvous) {
    if (rv.t != prev.t + (rv.x - prev.x).abs()) return false;
    prev = ServerState{rv.t + instance.client(rv.client_id).tau, rv.x};
  }
  return solution.return_time == prev.t + prev.x.abs();
}

bool is_colliding(const Instance& instance, const Solution& solution) {
  Rational prev_completion(0);
  for (const auto& rv : solution.rendezvous) {
    const Client& a = instance.client(rv.client_id);
    const Rational arrival = a.r + (a.s - rv.x).abs() / instance.v();
    if (rv.t != max(arrival, prev_completion)) return false;
    prev_completion = rv.t + a.tau;
  }
  return true;
}

// ---------------------------------------------------------------------------
// normalize

namespace {

struct Segment {
  Rational t0;
  Rational t1;
  Rational x0;
  int dir;  // -1, 0, +1
};

std::vector<Segment> trajectory(const Instance& instance, const Solution& sol) {
  std::vector<Segment> segs;
  ServerState prev{Rational(0), Rational(0)};
  auto travel = [&](const Rational& x) {
    const Rational dist = (x - prev.x).abs();
    if (dist.sign() > 0) segs.push_back(Segment{prev.t, prev.t + dist, prev.x, (x - prev.x).sign()});
    prev = ServerState{prev.t + dist, x};
  };
  for (const auto& rv : sol.rendezvous) {
    travel(rv.x);
    const Rational done = rv.t + instance.client(rv.client_id).tau;
    if (done > prev.t) segs.push_back(Segment{prev.t, done, rv.x, 0});
    prev.t = done;
  }
  travel(Rational(0));
  return segs;
}

// Earliest t in [lo, hi] with alpha + beta t <= 0 narrowed into [lo, hi].
bool narrow(Rational& lo, Rational& hi, const Rational& alpha, const Rational& beta) {
  if (beta.is_zero()) return alpha.sign() <= 0;
  const Rational root = -alpha / beta;
  if (beta.sign() > 0) {
    hi = min(hi, root);
  } else {
    lo = max(lo, root);
  }
  return lo <= hi;
}

// Earliest time the trajectory enters the client's reachable cone.
std::optional<Rational> first_contact(const std::vector<Segment>& segs, const Client& a, const Rational& v) {
  for (const auto& seg : segs) {
    Rational lo = max(seg.t0, a.r);
    Rational hi = seg.t1;
    if (lo > hi) continue;
    // x(t) = x0 + dir (t - t0); need x(t) - s <= v (t - r) and s - x(t) <= v (t - r).
    const Rational dir(seg.dir);
    const Rational base = seg.x0 - dir * seg.t0 - a.s;  // x(t) - s = base + dir t
    if (!narrow(lo, hi, base + v * a.r, dir - v)) continue;
    if (!narrow(lo, hi, -base + v * a.r, -dir - v)) continue;
    return lo;
  }
  return std::nullopt;
}

// First client (in service order) served after a strictly farther client of
// its own side, together with that farther client's time. Simultaneous
// meetings in distance order are left alone.
std::optional<std::pair<std::size_t, Rational>> first_order_violation(const Instance& instance,
                                                                      const Solution& sol) {
  for (std::size_t j = 0; j < sol.rendezvous.size(); ++j) {
    const Client& a = instance.client(sol.rendezvous[j].client_id);
    std::optional<Rational> earliest_farther;
    for (std::size_t i = 0; i < sol.rendezvous.size(); ++i) {
      const Client& b = instance.client(sol.rendezvous[i].client_id);
      if (side_of(b) != side_of(a) || !(a.s.abs() < b.s.abs())) continue;
      const bool before = i < j || sol.rendezvous[i].t < sol.rendezvous[j].t;
      if (before && (!earliest_farther || sol.rendezvous[i].t < *earliest_farther)) {
        earliest_farther = sol.rendezvous[i].t;
      }
    }
    if (earliest_farther) return std::make_pair(j, *earliest_farther);
  }
  return std::nullopt;
}

Rational objective_of(const Instance& instance, const Solution& sol, Objective objective) {
  const Objectives o = objectives(instance, sol);
  return objective == Objective::SumCompletion ? o.c_sum : o.c_max;
}

// Same-side pairs met at the same instant at different distances.
std::size_t simultaneous_pairs(const Instance& instance, const Solution& sol) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < sol.rendezvous.size(); ++i) {
    const Client& a = instance.client(sol.rendezvous[i].client_id);
    for (std::size_t j = i + 1; j < sol.rendezvous.size(); ++j) {
      const Client& b = instance.client(sol.rendezvous[j].client_id);
      if (sol.rendezvous[i].t == sol.rendezvous[j].t && side_of(a) == side_of(b) && a.s.abs() != b.s.abs()) {
        ++count;
      }
    }
  }
  return count;
}

// Single moves (one client reinserted elsewhere) that keep the order free of
// strict violations, do not raise the objective and reduce simultaneous pairs.
Solution separate_ties(const Instance& instance, Solution current, Objective objective) {
  std::size_t ties = simultaneous_pairs(instance, current);
  while (ties > 0) {
    const Rational bound = objective_of(instance, current, objective);
    std::optional<Solution> better;
    const std::size_t n = current.sequence.size();
    for (std::size_t from = 0; from < n && !better; ++from) {
      for (std::size_t to = 0; to < n && !better; ++to) {
        if (to == from) continue;
        std::vector<std::string> seq = current.sequence;
        const std::string id = seq[from];
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(from));
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(to), id);
        auto candidate = oracle::schedule_sequence(instance, seq);
        if (!candidate || objective_of(instance, *candidate, objective) > bound) continue;
        if (first_order_violation(instance, *candidate)) continue;
        if (simultaneous_pairs(instance, *candidate) < ties) better = std::move(candidate);
      }
    }
    if (!better) break;
    current = std::move(*better);
    ties = simultaneous_pairs(instance, current);
  }
  return current;
}

}  // namespace

Solution normalize(const Instance& instance, const Solution& solution, Objective objective) {
  const VariantSignature sig = classify(instance, objective);
  if (sig.speed != Speed::Slow) {
    throw NormalizeError("normalize needs slow clients (v < 1); variant " + to_string(sig));
  }
  if (sig.windows == Windows::ReleaseOnly || sig.windows == Windows::TimeWindows) {
    throw NormalizeError("normalize does not cover release dates; variant " + to_string(sig));
  }
  const bool zero = sig.processing == Processing::Zero;
  if (objective == Objective::SumCompletion && !zero) {
    throw NormalizeError("sum-of-completions normalization needs zero processing times; variant " +
                         to_string(sig));
  }
  const bool reorder = zero || sig.windows == Windows::None;

  const Verdict verdict = check_feasible(instance, solution);
  if (!verdict.ok()) throw NormalizeError("normalize needs a feasible solution");

  auto current = oracle::schedule_sequence(instance, solution.sequence);
  if (!current) throw std::logic_error("greedy schedule lost feasibility of a feasible order");

  const std::size_t max_rounds = instance.size() * instance.size() + 1;
  for (std::size_t round = 0; reorder; ++round) {
    auto violation = first_order_violation(instance, *current);
    if (!violation) break;
    if (round == max_rounds) throw std::logic_error("order-preservation rewrite did not converge");
    const auto [j, farther_t] = *violation;
    const Client& a = instance.client(current->sequence[j]);
    const auto contact = first_contact(trajectory(instance, *current), a, instance.v());
    if (!contact || *contact > farther_t) {
      throw std::logic_error("order-preservation rewrite found no earlier contact for '" + a.id + "'");
    }
    std::vector<std::string> seq;
    bool placed = false;
    for (std::size_t k = 0; k < current->rendezvous.size(); ++k) {
      if (k == j) continue;
      if (!placed && current->rendezvous[k].t >= *contact) {
        seq.push_back(a.id);
        placed = true;
      }
      seq.push_back(current->sequence[k]);
    }
    if (!placed) seq.push_back(a.id);
    current = oracle::schedule_sequence(instance, seq);
    if (!current) throw std::logic_error("order-preservation rewrite produced an infeasible order");
  }
  if (reorder) current = separate_ties(instance, *current, objective);

  if (objective_of(instance, *current, objective) > objective_of(instance, solution, objective)) {
    throw std::logic_error("normalize increased the objective");
  }
  return *current;
}

}  // namespace linecollab::validator
