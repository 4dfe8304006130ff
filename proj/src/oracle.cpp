#include "linecollab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "linecollab/kinematics.hpp"

namespace linecollab::oracle {

namespace {

using kinematics::Meeting;
using kinematics::ServerState;

using MeetFn = std::function<Meeting(const ServerState&, const Client&)>;

std::optional<Solution> schedule_with(const Instance& instance, const std::vector<std::string>& sequence,
                                      const MeetFn& meet) {
  Solution sol;
  ServerState server{Rational(0), Rational(0)};
  for (const auto& id : sequence) {
    const Client& a = instance.client(id);
    Meeting m = meet(server, a);
    if (a.d && m.t > *a.d) return std::nullopt;
    sol.sequence.push_back(id);
    sol.rendezvous.push_back(make_rendezvous(a, m.t, m.x));
    server = ServerState{sol.rendezvous.back().completion, m.x};
  }
  sol.return_time = server.t + server.x.abs();
  return sol;
}

struct Dfs {
  const Instance& instance;
  Objective objective;
  bool stationary;

  std::vector<bool> used;
  std::vector<std::size_t> order;
  std::vector<Rendezvous> path;
  std::optional<Solution> best;
  std::optional<Rational> best_value;
  std::size_t evaluated = 0;

  Meeting meet(const ServerState& server, const Client& a) const {
    if (!stationary) return kinematics::earliest_meeting(server, a, instance.v());
    const Rational arrive = server.t + (a.s - server.x).abs();
    return Meeting{max(arrive, a.r), a.s};
  }

  // Returns true once the search may stop (feasibility objective).
  bool run(const ServerState& server, const Rational& partial_sum) {
    const auto& clients = instance.clients();
    if (order.size() == clients.size()) {
      ++evaluated;
      Solution sol;
      for (std::size_t k : order) sol.sequence.push_back(clients[k].id);
      sol.rendezvous = path;
      sol.return_time = server.t + server.x.abs();
      const Rational value = objective == Objective::SumCompletion ? partial_sum : sol.return_time;
      if (!best_value || value < *best_value) {
        best_value = value;
        best = std::move(sol);
      }
      return objective == Objective::FeasibilityOnly;
    }
    for (std::size_t k = 0; k < clients.size(); ++k) {
      if (used[k]) continue;
      const Client& a = clients[k];
      Meeting m = meet(server, a);
      if (a.d && m.t > *a.d) continue;
      used[k] = true;
      order.push_back(k);
      path.push_back(make_rendezvous(a, m.t, m.x));
      const Rational completion = path.back().completion;
      const bool stop = run(ServerState{completion, m.x}, partial_sum + completion);
      path.pop_back();
      order.pop_back();
      used[k] = false;
      if (stop) return true;
    }
    return false;
  }
};

EnumerationResult enumerate(const Instance& instance, Objective objective, std::size_t cap, bool stationary) {
  if (instance.size() > cap) {
    throw OracleError("enumeration oracle is capped at " + std::to_string(cap) + " clients, instance has " +
                      std::to_string(instance.size()));
  }
  Dfs dfs{instance, objective, stationary, std::vector<bool>(instance.size(), false), {}, {}, {}, {}, 0};
  dfs.run(ServerState{Rational(0), Rational(0)}, Rational(0));
  return EnumerationResult{std::move(dfs.best), dfs.evaluated};
}

}  // namespace

std::optional<Solution> schedule_sequence(const Instance& instance, const std::vector<std::string>& sequence) {
  return schedule_with(instance, sequence, [&](const ServerState& server, const Client& a) {
    return kinematics::earliest_meeting(server, a, instance.v());
  });
}

std::optional<Solution> schedule_stationary(const Instance& instance, const std::vector<std::string>& sequence) {
  return schedule_with(instance, sequence, [](const ServerState& server, const Client& a) {
    const Rational arrive = server.t + (a.s - server.x).abs();
    return Meeting{max(arrive, a.r), a.s};
  });
}

EnumerationResult best_by_enumeration(const Instance& instance, Objective objective, std::size_t cap) {
  if (instance.v() >= Rational(1)) {
    throw OracleError("enumeration oracle requires slow clients (v < 1); got v = " + instance.v().str());
  }
  return enumerate(instance, objective, cap, false);
}

EnumerationResult best_stationary_by_enumeration(const Instance& instance, Objective objective, std::size_t cap) {
  return enumerate(instance, objective, cap, true);
}

// ---------------------------------------------------------------------------
// Grid oracle

namespace {

struct Cell {
  std::optional<Rational> time;  // earliest time the server is free here
  int client = -1;               // last client served on the way here
  int meet_pos = -1;             // candidate index where it was served
};

std::vector<Rational> candidate_positions(const Instance& instance, const Rational& h) {
  const auto& clients = instance.clients();
  Rational lo(0);
  Rational hi(0);
  for (const auto& a : clients) {
    lo = min(lo, a.s);
    hi = max(hi, a.s);
  }
  std::set<Rational> pts;
  auto add = [&](const Rational& p) {
    if (p >= lo && p <= hi) pts.insert(p);
  };
  // Multiples of h inside [lo, hi].
  const mpz_class first = [&] {
    mpq_class q = lo.raw() / h.raw();
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
  }();
  for (mpz_class k = first;; ++k) {
    const Rational p = Rational(mpq_class(k)) * h;
    if (p > hi) break;
    pts.insert(p);
  }
  add(Rational(0));
  for (const auto& a : clients) add(a.s);
  for (const auto& a : clients) {
    if (!a.d) continue;
    const Rational reach = instance.v() * (*a.d - a.r);
    add(a.s - reach);
    add(a.s + reach);
    add(*a.d);
    add(-*a.d);
    for (const auto& b : clients) {
      if (!b.d || *b.d < *a.d) continue;
      const Rational gap = *b.d - *a.d;
      add(a.s - reach - gap);
      add(a.s + reach + gap);
    }
  }
  return {pts.begin(), pts.end()};
}

// In-place transform: t(q) <- min_p t(p) + |q - p|, keeping provenance.
void distance_transform(std::vector<Cell>& cells, const std::vector<Rational>& pos) {
  for (std::size_t q = 1; q < cells.size(); ++q) {
    if (!cells[q - 1].time) continue;
    Rational via = *cells[q - 1].time + (pos[q] - pos[q - 1]);
    if (!cells[q].time || via < *cells[q].time) {
      cells[q].time = std::move(via);
      cells[q].client = cells[q - 1].client;
      cells[q].meet_pos = cells[q - 1].meet_pos;
    }
  }
  for (std::size_t q = cells.size() - 1; q-- > 0;) {
    if (!cells[q + 1].time) continue;
    Rational via = *cells[q + 1].time + (pos[q + 1] - pos[q]);
    if (!cells[q].time || via < *cells[q].time) {
      cells[q].time = std::move(via);
      cells[q].client = cells[q + 1].client;
      cells[q].meet_pos = cells[q + 1].meet_pos;
    }
  }
}

}  // namespace

std::optional<GridBracket> best_by_grid(const Instance& instance, Objective objective, const Rational& resolution,
                                        std::size_t cap) {
  if (resolution.sign() <= 0) throw OracleError("grid resolution must be positive, got " + resolution.str());
  if (instance.size() > cap) {
    throw OracleError("grid oracle is capped at " + std::to_string(cap) + " clients, instance has " +
                      std::to_string(instance.size()));
  }
  if (objective == Objective::SumCompletion) {
    throw OracleError("grid oracle certifies makespan and feasibility only");
  }
  const auto& clients = instance.clients();
  const std::size_t n = clients.size();
  const std::vector<Rational> pos = candidate_positions(instance, resolution);
  const std::size_t g = pos.size();
  const std::size_t origin = static_cast<std::size_t>(
      std::lower_bound(pos.begin(), pos.end(), Rational(0)) - pos.begin());

  // table[mask][q]: earliest time the server is free at pos[q] having served mask.
  std::vector<std::vector<Cell>> table(std::size_t{1} << n, std::vector<Cell>(g));
  for (std::size_t q = 0; q < g; ++q) table[0][q].time = pos[q].abs();

  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    if (mask != 0) distance_transform(table[mask], pos);
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) continue;
      const Client& a = clients[k];
      auto& next = table[mask | (std::size_t{1} << k)];
      for (std::size_t p = 0; p < g; ++p) {
        const auto& here = table[mask][p].time;
        if (!here) continue;
        const Rational arrive = a.r + (pos[p] - a.s).abs() / instance.v();
        const Rational meet = max(*here, arrive);
        if (a.d && meet > *a.d) continue;
        Rational done = meet + a.tau;
        if (!next[p].time || done < *next[p].time) {
          next[p] = Cell{std::move(done), static_cast<int>(k), static_cast<int>(p)};
        }
      }
    }
  }
  const std::size_t full = table.size() - 1;
  if (!table[full][origin].time) return std::nullopt;

  // Walk provenance backwards to rebuild the witness.
  GridBracket out;
  out.candidate_positions = g;
  out.upper = *table[full][origin].time;
  out.lower = out.upper - Rational(static_cast<long>(n)) * (Rational(1) + instance.v()) * resolution;
  std::vector<std::pair<int, int>> served;  // (client, position)
  std::size_t mask = full;
  std::size_t q = origin;
  while (mask != 0) {
    const Cell& c = table[mask][q];
    served.emplace_back(c.client, c.meet_pos);
    mask &= ~(std::size_t{1} << c.client);
    q = static_cast<std::size_t>(c.meet_pos);
  }
  std::reverse(served.begin(), served.end());
  ServerState server{Rational(0), Rational(0)};
  for (auto [k, p] : served) {
    const Client& a = clients[static_cast<std::size_t>(k)];
    const Rational& x = pos[static_cast<std::size_t>(p)];
    const Rational arrive_server = server.t + (x - server.x).abs();
    const Rational arrive_client = a.r + (x - a.s).abs() / instance.v();
    out.witness.sequence.push_back(a.id);
    out.witness.rendezvous.push_back(make_rendezvous(a, max(arrive_server, arrive_client), x));
    server = ServerState{out.witness.rendezvous.back().completion, x};
  }
  out.witness.return_time = server.t + server.x.abs();
  return out;
}

}  // namespace linecollab::oracle
