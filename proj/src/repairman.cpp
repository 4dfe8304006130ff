#include "linecollab/repairman.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace linecollab::repairman {

namespace {

struct Label {
  std::size_t i;
  std::size_t j;
  Side d;
  Rational t;
  Rational value;
  std::optional<std::size_t> parent;  // index into the label arena
};

const Client& client_of(const SideSplit& sides, const Label& l) {
  return l.d == Side::L ? sides.left[l.i - 1] : sides.right[l.j - 1];
}

Rational colliding_position(const Client& a, const Rational& v, const Rational& t) {
  return side_of(a) == Side::L ? a.s + v * t : a.s - v * t;
}

}  // namespace

Rational t_bound(const Instance& instance) {
  const SideSplit sides = split_sides(instance);
  Rational total(0);
  Rational at(0);
  std::size_t li = 0;
  std::size_t ri = 0;
  bool left_turn = !sides.left.empty();
  while (li < sides.left.size() || ri < sides.right.size()) {
    if (li == sides.left.size()) left_turn = false;
    if (ri == sides.right.size()) left_turn = true;
    const Client& a = left_turn ? sides.left[li++] : sides.right[ri++];
    total += (a.s - at).abs();
    at = a.s;
    left_turn = !left_turn;
  }
  return total;
}

TrpResult solve_trp_dp(const Instance& instance, const TrpOptions& options) {
  const VariantSignature sig = classify(instance, Objective::SumCompletion);
  if (!(sig.speed == Speed::Slow && (sig.windows == Windows::None || sig.windows == Windows::DeadlineOnly) &&
        sig.processing == Processing::Zero)) {
    throw VariantMismatch("solver requires cell (slow, deadline or none, zero); instance is " + to_string(sig));
  }
  const Rational& v = instance.v();
  const SideSplit sides = split_sides(instance);
  const std::size_t nl = sides.left.size();
  const std::size_t nr = sides.right.size();
  const std::size_t n = instance.size();

  TrpResult out;
  out.t_bound = t_bound(instance);
  if (n == 0) {
    out.value = Rational(0);
    out.solution = Solution{};
    return out;
  }

  std::vector<Label> arena;
  using Key = std::tuple<std::size_t, std::size_t, int>;
  std::map<Key, std::vector<std::size_t>> layer;

  auto offer = [&](std::size_t i, std::size_t j, Side d, const Rational& t, const Rational& value,
                   std::optional<std::size_t> parent) {
    const Client& a = d == Side::L ? sides.left[i - 1] : sides.right[j - 1];
    if (a.d && t > *a.d) return;
    if (options.truncate_at_t_bound && t > out.t_bound) return;
    arena.push_back(Label{i, j, d, t, value, parent});
    layer[Key{i, j, d == Side::L ? 0 : 1}].push_back(arena.size() - 1);
  };

  const Rational one_plus_v = Rational(1) + v;
  const Rational count(static_cast<long>(n));
  if (nl > 0) {
    const Rational t = sides.left[0].s.abs() / one_plus_v;
    offer(1, 0, Side::L, t, count * t, std::nullopt);
  }
  if (nr > 0) {
    const Rational t = sides.right[0].s.abs() / one_plus_v;
    offer(0, 1, Side::R, t, count * t, std::nullopt);
  }

  std::optional<std::size_t> best;
  for (std::size_t m = 1; m <= n; ++m) {
    std::map<Key, std::vector<std::size_t>> current;
    std::swap(current, layer);
    const Rational waiting(static_cast<long>(n - m));
    for (auto& [key, ids] : current) {
      // Keep the minimal D per t, then apply the two-coordinate dominance.
      std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        if (arena[a].t != arena[b].t) return arena[a].t < arena[b].t;
        return arena[a].value < arena[b].value;
      });
      std::vector<std::size_t> kept;
      std::optional<Rational> best_served;
      for (std::size_t id : ids) {
        const Label& l = arena[id];
        if (!kept.empty() && arena[kept.back()].t == l.t) continue;
        const Rational served = l.value - waiting * l.t;
        if (options.dominance && best_served && *best_served <= served) continue;
        if (!best_served || served < *best_served) best_served = served;
        kept.push_back(id);
      }

      for (std::size_t id : kept) {
        const Label l = arena[id];
        ++out.states_explored;
        out.max_t = max(out.max_t, l.t);
        if (l.t > out.t_bound) ++out.states_above_bound;
        if (m == n) {
          if (!best || l.value < arena[*best].value) best = id;
          continue;
        }
        const Rational x = colliding_position(client_of(sides, l), v, l.t);
        const Rational charge(static_cast<long>(n - m));
        if (l.i < nl) {
          const Rational t = l.t + (x - colliding_position(sides.left[l.i], v, l.t)).abs() / one_plus_v;
          offer(l.i + 1, l.j, Side::L, t, l.value + charge * (t - l.t), id);
        }
        if (l.j < nr) {
          const Rational t = l.t + (x - colliding_position(sides.right[l.j], v, l.t)).abs() / one_plus_v;
          offer(l.i, l.j + 1, Side::R, t, l.value + charge * (t - l.t), id);
        }
      }
    }
  }
  if (!best) return out;

  std::vector<std::size_t> path;
  for (std::optional<std::size_t> id = best; id; id = arena[*id].parent) path.push_back(*id);
  std::reverse(path.begin(), path.end());
  Solution sol;
  for (std::size_t id : path) {
    const Label& l = arena[id];
    const Client& a = client_of(sides, l);
    sol.sequence.push_back(a.id);
    sol.rendezvous.push_back(make_rendezvous(a, l.t, colliding_position(a, v, l.t)));
  }
  sol.return_time = sol.rendezvous.back().t + sol.rendezvous.back().x.abs();
  out.value = arena[*best].value;
  out.solution = std::move(sol);
  return out;
}

}  // namespace linecollab::repairman
