#include "linecollab/salesman.hpp"

#include <algorithm>

#include "linecollab/kinematics.hpp"

namespace linecollab::salesman {

namespace {

using kinematics::ServerState;

void require(bool ok, const Instance& instance, const char* cell) {
  if (!ok) {
    throw VariantMismatch(std::string("solver requires cell ") + cell + "; instance is " +
                          to_string(classify(instance)));
  }
}

const Client& client_at(const SideSplit& sides, const DpState& s) {
  return s.d == Side::L ? sides.left[s.i - 1] : sides.right[s.j - 1];
}

// Position at time t of a client moving toward (and past) the origin since 0.
Rational colliding_position(const Client& a, const Rational& v, const Rational& t) {
  return side_of(a) == Side::L ? a.s + v * t : a.s - v * t;
}

Rational head_on(const Rational& server_x, const Rational& client_x, const Rational& v) {
  return (server_x - client_x).abs() / (Rational(1) + v);
}

bool meets_deadline(const Client& a, const Rational& t) { return !a.d || t <= *a.d; }

}  // namespace

Solution solve_slow_zero_unconstrained(const Instance& instance) {
  const VariantSignature sig = classify(instance);
  require(sig.speed == Speed::Slow && sig.windows == Windows::None && sig.processing == Processing::Zero,
          instance, "(slow, none, zero)");
  const Rational& v = instance.v();
  const SideSplit sides = split_sides(instance);

  Rational far_left(0);
  Rational far_right(0);
  if (!sides.left.empty()) far_left = sides.left.back().s.abs();
  if (!sides.right.empty()) far_right = sides.right.back().s.abs();
  const bool left_first = far_left > far_right;

  Solution sol;
  ServerState server{Rational(0), Rational(0)};
  auto sweep = [&](const std::vector<Client>& side) {
    for (const Client& a : side) {
      const Rational gap = head_on(server.x, colliding_position(a, v, server.t), v);
      const Rational t = server.t + gap;
      const Rational x = colliding_position(a, v, t);
      sol.sequence.push_back(a.id);
      sol.rendezvous.push_back(make_rendezvous(a, t, x));
      server = ServerState{t, x};
    }
  };
  sweep(left_first ? sides.left : sides.right);
  sweep(left_first ? sides.right : sides.left);
  sol.return_time = server.t + server.x.abs();
  return sol;
}

Solution solve_fast_release_general(const Instance& instance) {
  const VariantSignature sig = classify(instance);
  require(sig.fast_like() && (sig.windows == Windows::None || sig.windows == Windows::ReleaseOnly), instance,
          "(fast or unit, release or none, any processing)");
  const Rational& v = instance.v();
  std::vector<std::pair<Rational, const Client*>> order;
  order.reserve(instance.size());
  for (const Client& a : instance.clients()) order.emplace_back(kinematics::origin_arrival(a, v), &a);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second->id < y.second->id;
  });

  Solution sol;
  Rational free_at(0);
  for (const auto& [arrival, a] : order) {
    sol.sequence.push_back(a->id);
    sol.rendezvous.push_back(make_rendezvous(*a, max(arrival, free_at), Rational(0)));
    free_at = sol.rendezvous.back().completion;
  }
  sol.return_time = free_at;
  return sol;
}

TimeWindowResult solve_fast_timewindow_zero(const Instance& instance) {
  const VariantSignature sig = classify(instance);
  require(sig.fast_like() && sig.processing == Processing::Zero, instance,
          "(fast or unit, any windows, zero processing)");
  const Rational& v = instance.v();

  std::vector<const Client*> bounded;
  std::vector<const Client*> unbounded;
  for (const Client& a : instance.clients()) (a.d ? bounded : unbounded).push_back(&a);
  std::sort(bounded.begin(), bounded.end(), [](const Client* x, const Client* y) {
    if (*x->d != *y->d) return *x->d < *y->d;
    return x->id < y->id;
  });
  std::sort(unbounded.begin(), unbounded.end(), [](const Client* x, const Client* y) { return x->id < y->id; });

  TimeWindowResult out;
  for (const Client& a : instance.clients()) out.c_prime = max(out.c_prime, kinematics::origin_arrival(a, v));

  for (std::size_t k = 0; k < bounded.size(); ++k) {
    const Client& a = *bounded[k];
    const Rational reach = v * (*a.d - a.r);
    ReachableInterval iv{a.id, a.s - reach, a.s + reach, Rational(0), Rational(0)};
    if (k == 0) {
      iv.x_min = max(iv.y_min, -*a.d);
      iv.x_max = min(iv.y_max, *a.d);
    } else {
      const ReachableInterval& prev = out.intervals.back();
      const Rational gap = *a.d - *bounded[k - 1]->d;
      iv.x_min = max(iv.y_min, prev.x_min - gap);
      iv.x_max = min(iv.y_max, prev.x_max + gap);
    }
    out.intervals.push_back(iv);
    if (iv.empty()) return out;
  }

  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < out.intervals.size(); ++k) {
    if (!out.intervals[k].contains_origin()) last = k;
  }

  Solution sol;
  ServerState server{Rational(0), Rational(0)};
  std::size_t chain = 0;
  if (last) {
    chain = *last + 1;
    const ReachableInterval& end = out.intervals[*last];
    std::vector<Rational> p(chain);
    p[*last] = end.x_min.sign() > 0 ? end.x_min : end.x_max;
    for (std::size_t k = *last; k-- > 0;) {
      p[k] = std::clamp(p[k + 1], out.intervals[k].x_min, out.intervals[k].x_max);
    }
    for (std::size_t k = 0; k < chain; ++k) {
      sol.sequence.push_back(bounded[k]->id);
      sol.rendezvous.push_back(make_rendezvous(*bounded[k], *bounded[k]->d, p[k]));
    }
    out.c = end.x_min.sign() > 0 ? *bounded[*last]->d + end.x_min : *bounded[*last]->d - end.x_max;
    server = ServerState{out.c, Rational(0)};
  }

  std::vector<const Client*> at_origin(bounded.begin() + static_cast<std::ptrdiff_t>(chain), bounded.end());
  at_origin.insert(at_origin.end(), unbounded.begin(), unbounded.end());
  for (const Client* a : at_origin) {
    const Rational t = max(server.t, kinematics::origin_arrival(*a, v));
    sol.sequence.push_back(a->id);
    sol.rendezvous.push_back(make_rendezvous(*a, t, Rational(0)));
    server.t = t;
  }
  sol.return_time = max(server.t + server.x.abs(), max(out.c, out.c_prime));
  out.solution = std::move(sol);
  return out;
}

DpResult solve_dp_deadlines_zero_slow(const Instance& instance) {
  const VariantSignature sig = classify(instance);
  require(sig.speed == Speed::Slow && (sig.windows == Windows::None || sig.windows == Windows::DeadlineOnly) &&
              sig.processing == Processing::Zero,
          instance, "(slow, deadline or none, zero)");
  const Rational& v = instance.v();
  const SideSplit sides = split_sides(instance);
  const std::size_t nl = sides.left.size();
  const std::size_t nr = sides.right.size();

  DpResult out;
  out.table = DpTable(nl, nr);
  if (instance.empty()) {
    out.terminal = Rational(0);
    out.solution = Solution{};
    return out;
  }

  for (std::size_t i = 0; i <= nl; ++i) {
    for (std::size_t j = 0; j <= nr; ++j) {
      for (Side d : {Side::L, Side::R}) {
        const DpState s{i, j, d};
        if ((d == Side::L && i == 0) || (d == Side::R && j == 0)) continue;
        ++out.states_explored;
        const Client& next = client_at(sides, s);
        DpCell& cell = out.table.at(s);
        if (i + j == 1) {
          const Rational t = next.s.abs() / (Rational(1) + v);
          if (meets_deadline(next, t)) cell.value = t;
          continue;
        }
        for (Side pd : {Side::L, Side::R}) {
          const DpState p = d == Side::L ? DpState{i - 1, j, pd} : DpState{i, j - 1, pd};
          if ((pd == Side::L && p.i == 0) || (pd == Side::R && p.j == 0)) continue;
          const DpCell& prev = out.table.at(p);
          if (!prev.value) continue;
          const Rational x_prev = colliding_position(client_at(sides, p), v, *prev.value);
          const Rational x_next = colliding_position(next, v, *prev.value);
          const Rational t = *prev.value + head_on(x_prev, x_next, v);
          if (!meets_deadline(next, t)) continue;
          if (!cell.value || t < *cell.value) {
            cell.value = t;
            cell.predecessor = p;
          }
        }
      }
    }
  }

  std::optional<DpState> best;
  for (Side d : {Side::L, Side::R}) {
    const DpState s{nl, nr, d};
    if ((d == Side::L && nl == 0) || (d == Side::R && nr == 0)) continue;
    const DpCell& cell = out.table.at(s);
    if (!cell.value) continue;
    const Rational total = *cell.value + colliding_position(client_at(sides, s), v, *cell.value).abs();
    if (!out.terminal || total < *out.terminal) {
      out.terminal = total;
      best = s;
    }
  }
  if (!best) return out;

  std::vector<DpState> path;
  for (std::optional<DpState> s = best; s; s = out.table.at(*s).predecessor) path.push_back(*s);
  std::reverse(path.begin(), path.end());
  Solution sol;
  for (const DpState& s : path) {
    const Client& a = client_at(sides, s);
    const Rational& t = *out.table.at(s).value;
    sol.sequence.push_back(a.id);
    sol.rendezvous.push_back(make_rendezvous(a, t, colliding_position(a, v, t)));
  }
  sol.return_time = *out.terminal;
  out.solution = std::move(sol);
  return out;
}

Cascade busy_cascade(const Instance& instance, const SideSplit& sides, const Rational& position,
                     const Rational& busy_until, std::size_t served_left, std::size_t served_right,
                     std::optional<Rendezvous> last) {
  const Rational& v = instance.v();
  Cascade c{served_left, served_right, busy_until, {}};
  auto ties_last = [&](const Client& b) {
    if (!last || last->t != c.busy_until) return false;
    const Client& p = instance.client(last->client_id);
    return side_of(p) == side_of(b) && p.s.abs() != b.s.abs();
  };
  for (;;) {
    std::optional<Rational> left_arrival;
    std::optional<Rational> right_arrival;
    if (c.served_left < sides.left.size()) {
      left_arrival = (position - sides.left[c.served_left].s).abs() / v;
    }
    if (c.served_right < sides.right.size()) {
      right_arrival = (sides.right[c.served_right].s - position).abs() / v;
    }
    const bool left_waiting = left_arrival && *left_arrival <= c.busy_until;
    const bool right_waiting = right_arrival && *right_arrival <= c.busy_until;
    if (!left_waiting && !right_waiting) break;
    bool take_left = left_waiting && (!right_waiting || *left_arrival <= *right_arrival);
    if (left_waiting && right_waiting) {
      const bool left_ties = ties_last(sides.left[c.served_left]);
      const bool right_ties = ties_last(sides.right[c.served_right]);
      if (left_ties != right_ties) take_left = right_ties;
    }
    const Client& a = take_left ? sides.left[c.served_left++] : sides.right[c.served_right++];
    c.absorbed.push_back(make_rendezvous(a, c.busy_until, position));
    last = c.absorbed.back();
    c.busy_until = c.absorbed.back().completion;
  }
  return c;
}

DpResult solve_dp_unconstrained_general_slow(const Instance& instance) {
  const VariantSignature sig = classify(instance);
  require(sig.speed == Speed::Slow && sig.windows == Windows::None, instance, "(slow, none, any processing)");
  const Rational& v = instance.v();
  const SideSplit sides = split_sides(instance);
  const std::size_t nl = sides.left.size();
  const std::size_t nr = sides.right.size();

  DpResult out;
  out.table = DpTable(nl, nr);
  if (instance.empty()) {
    out.terminal = Rational(0);
    out.solution = Solution{};
    return out;
  }
  if (nl > 0) out.table.at(DpState{1, 0, Side::L}).value = sides.left[0].s.abs() / (Rational(1) + v);
  if (nr > 0) out.table.at(DpState{0, 1, Side::R}).value = sides.right[0].s.abs() / (Rational(1) + v);

  // Among equal values, prefer paths without simultaneous meetings of same-side clients.
  std::vector<char> tied((nl + 1) * (nr + 1) * 2, 0);
  auto tie_index = [&](const DpState& s) { return (s.i * (nr + 1) + s.j) * 2 + (s.d == Side::L ? 0 : 1); };
  auto relax = [&](const DpState& to, const DpState& from, const Rational& t, bool tie) {
    DpCell& cell = out.table.at(to);
    char& flag = tied[tie_index(to)];
    if (!cell.value || t < *cell.value || (t == *cell.value && flag && !tie)) {
      cell.value = t;
      cell.predecessor = from;
      flag = tie;
    }
  };
  auto segment_tie = [&](const Client& a, const Rational& t, const Cascade& c) {
    const Client* prev = &a;
    Rational prev_t = t;
    for (const Rendezvous& rv : c.absorbed) {
      const Client& b = instance.client(rv.client_id);
      if (rv.t == prev_t && side_of(b) == side_of(*prev) && b.s.abs() != prev->s.abs()) return true;
      prev = &b;
      prev_t = rv.t;
    }
    return false;
  };
  bool best_tied = false;

  std::optional<DpState> best;
  for (std::size_t i = 0; i <= nl; ++i) {
    for (std::size_t j = 0; j <= nr; ++j) {
      for (Side d : {Side::L, Side::R}) {
        const DpState s{i, j, d};
        if ((d == Side::L && i == 0) || (d == Side::R && j == 0)) continue;
        const DpCell& cell = out.table.at(s);
        if (!cell.value) continue;
        ++out.states_explored;
        const Client& a = client_at(sides, s);
        const Rational x = colliding_position(a, v, *cell.value);
        const Cascade c = busy_cascade(instance, sides, x, *cell.value + a.tau, i, j,
                                       make_rendezvous(a, *cell.value, x));
        const bool tie = tied[tie_index(s)] || segment_tie(a, *cell.value, c);
        if (c.served_left == nl && c.served_right == nr) {
          const Rational total = c.busy_until + x.abs();
          if (!out.terminal || total < *out.terminal || (total == *out.terminal && best_tied && !tie)) {
            out.terminal = total;
            best = s;
            best_tied = tie;
          }
          continue;
        }
        if (c.served_left < nl) {
          const Client& next = sides.left[c.served_left];
          relax(DpState{c.served_left + 1, c.served_right, Side::L}, s,
                c.busy_until + head_on(x, colliding_position(next, v, c.busy_until), v), tie);
        }
        if (c.served_right < nr) {
          const Client& next = sides.right[c.served_right];
          relax(DpState{c.served_left, c.served_right + 1, Side::R}, s,
                c.busy_until + head_on(x, colliding_position(next, v, c.busy_until), v), tie);
        }
      }
    }
  }
  if (!best) return out;

  std::vector<DpState> path;
  for (std::optional<DpState> s = best; s; s = out.table.at(*s).predecessor) path.push_back(*s);
  std::reverse(path.begin(), path.end());
  Solution sol;
  for (const DpState& s : path) {
    const Client& a = client_at(sides, s);
    const Rational& t = *out.table.at(s).value;
    const Rational x = colliding_position(a, v, t);
    sol.sequence.push_back(a.id);
    sol.rendezvous.push_back(make_rendezvous(a, t, x));
    const Cascade c = busy_cascade(instance, sides, x, sol.rendezvous.back().completion, s.i, s.j,
                                       sol.rendezvous.back());
    for (const Rendezvous& rv : c.absorbed) {
      sol.sequence.push_back(rv.client_id);
      sol.rendezvous.push_back(rv);
    }
  }
  sol.return_time = *out.terminal;
  out.solution = std::move(sol);
  return out;
}

}  // namespace linecollab::salesman
