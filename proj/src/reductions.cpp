#include "linecollab/reductions.hpp"

#include <numeric>
#include <string>

#include <json.hpp>

namespace linecollab::reductions {

void validate(const ThreePartitionInput& input) {
  if (input.m <= 0) throw ReductionError("3-partition needs m >= 1, got " + std::to_string(input.m));
  if (input.b <= 0) throw ReductionError("3-partition needs B >= 1, got " + std::to_string(input.b));
  if (input.items.size() != static_cast<std::size_t>(3 * input.m)) {
    throw ReductionError("3-partition needs 3m = " + std::to_string(3 * input.m) + " items, got " +
                         std::to_string(input.items.size()));
  }
  const std::int64_t sum = std::accumulate(input.items.begin(), input.items.end(), std::int64_t{0});
  if (sum != input.m * input.b) {
    throw ReductionError("items sum to " + std::to_string(sum) + ", expected mB = " +
                         std::to_string(input.m * input.b));
  }
  for (std::int64_t a : input.items) {
    if (!(4 * a > input.b && 2 * a < input.b)) {
      throw ReductionError("item " + std::to_string(a) + " is not strictly between B/4 and B/2 for B = " +
                           std::to_string(input.b));
    }
  }
}

ThreePartitionInput parse_three_partition(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ThreePartitionInput in;
    in.m = j.at("m").get<std::int64_t>();
    in.b = j.at("B").get<std::int64_t>();
    in.items = j.at("items").get<std::vector<std::int64_t>>();
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(ModelErrorKind::Malformed, std::string("3-partition file: ") + e.what());
  }
}

Instance reduce_3partition(const ThreePartitionInput& input, const Rational& v) {
  validate(input);
  if (v.sign() <= 0) throw ReductionError("velocity must be positive, got " + v.str());
  std::vector<Client> clients;
  const Rational horizon(input.m * input.b);
  for (std::size_t k = 0; k < input.items.size(); ++k) {
    clients.push_back(Client{"p" + std::to_string(k + 1), Rational(0), Rational(0), horizon,
                             Rational(input.items[k])});
  }
  for (std::int64_t j = 1; j < input.m; ++j) {
    const Rational deadline(j * input.b);
    const Rational dist = v * deadline;
    clients.push_back(Client{"q" + std::to_string(j), j % 2 == 1 ? dist : -dist, Rational(0), deadline,
                             Rational(0)});
  }
  return Instance(v, std::move(clients));
}

Rational k_bound(const Instance& instance) {
  Rational r_max(0);
  Rational s_max(0);
  Rational tau_max(0);
  for (const Client& a : instance.clients()) {
    r_max = max(r_max, a.r);
    s_max = max(s_max, a.s.abs());
    tau_max = max(tau_max, a.tau);
  }
  return Rational(static_cast<long>(instance.size())) * (r_max + Rational(2) * s_max + tau_max);
}

Instance embed_slow(const Instance& stationary, Objective objective) {
  const Rational k = k_bound(stationary);
  const long n = static_cast<long>(stationary.size());
  const Rational factor = objective == Objective::SumCompletion ? Rational(n * (n + 1), 2) : Rational(n);
  return stationary.with_speed(Rational(1) / (factor * k + Rational(1)));
}

}  // namespace linecollab::reductions
