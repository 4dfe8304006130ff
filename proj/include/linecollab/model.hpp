#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linecollab/rational.hpp"

namespace linecollab {

enum class ModelErrorKind {
  Malformed,             // unparsable text or missing fields
  NonPositiveSpeed,      // v <= 0
  ReleaseAfterDeadline,  // r > d
  NegativeValue,         // r < 0 or tau < 0
  DuplicateId,
  UnknownClient,
  Structure,             // solution does not line up with the instance
};

/// Raised when an instance or solution violates its construction invariants.
class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ModelErrorKind kind() const { return kind_; }

 private:
  ModelErrorKind kind_;
};

/// Raised when a solver is handed an instance outside the cell it solves. The
/// message names the required cell.
class VariantMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A deadline of std::nullopt means +infinity.
using Deadline = std::optional<Rational>;

struct Client {
  std::string id;
  Rational s;       // start position
  Rational r;       // release date
  Deadline d;       // deadline, nullopt = +infinity
  Rational tau;     // processing time

  bool operator==(const Client&) const = default;
};

enum class Side { L, R };

/// Clients with s <= 0 belong to L, the rest to R.
inline Side side_of(const Client& c) { return c.s.sign() <= 0 ? Side::L : Side::R; }

/// Client set plus client speed v (the server moves at unit speed).
///
/// Validates on construction: v > 0, unique ids, r >= 0, tau >= 0, r <= d.
class Instance {
 public:
  Instance() : v_(1) {}
  Instance(Rational v, std::vector<Client> clients);

  const Rational& v() const { return v_; }
  const std::vector<Client>& clients() const { return clients_; }
  std::size_t size() const { return clients_.size(); }
  bool empty() const { return clients_.empty(); }

  /// Throws ModelError for unknown ids.
  const Client& client(std::string_view id) const;
  std::optional<std::size_t> index_of(std::string_view id) const;

  /// Same clients with a different speed.
  Instance with_speed(Rational v) const { return Instance(std::move(v), clients_); }

  bool operator==(const Instance&) const = default;

 private:
  Rational v_;
  std::vector<Client> clients_;
};

enum class Speed { Slow, Fast, Unit };
enum class Windows { None, ReleaseOnly, DeadlineOnly, TimeWindows };
enum class Processing { Zero, General };
enum class Objective { Makespan, SumCompletion, FeasibilityOnly };

/// Cell of the variant taxonomy an instance falls into.
struct VariantSignature {
  Speed speed = Speed::Slow;
  Windows windows = Windows::None;
  Processing processing = Processing::Zero;
  Objective objective = Objective::FeasibilityOnly;

  /// Unit speed behaves like fast clients (v >= 1) everywhere.
  bool fast_like() const { return speed != Speed::Slow; }
  bool operator==(const VariantSignature&) const = default;
};

/// Derives the taxonomy cell of `instance`. The objective field is set to
/// `objective` since it is not a property of the data.
VariantSignature classify(const Instance& instance,
                          Objective objective = Objective::FeasibilityOnly);

std::string to_string(Speed s);
std::string to_string(Windows w);
std::string to_string(Processing p);
std::string to_string(Objective o);
std::string to_string(const VariantSignature& sig);
Speed parse_speed(std::string_view s);
Windows parse_windows(std::string_view s);
Processing parse_processing(std::string_view s);
Objective parse_objective(std::string_view s);

/// Left and right client lists, each ordered by |s| non-decreasing with ties
/// broken by processing time, then id. These are the l(1..nL) and r(1..nR)
/// orderings the dynamic programs index into.
struct SideSplit {
  std::vector<Client> left;
  std::vector<Client> right;
};

SideSplit split_sides(const Instance& instance);

struct Rendezvous {
  std::string client_id;
  Rational t;
  Rational x;
  Rational completion;  // t + tau(client)

  bool operator==(const Rendezvous&) const = default;
};

/// Service sequence with aligned rendezvous and the return to the origin.
struct Solution {
  std::vector<std::string> sequence;
  std::vector<Rendezvous> rendezvous;
  Rational return_time;

  bool operator==(const Solution&) const = default;
};

/// Builds a rendezvous record with completion = t + tau(client).
Rendezvous make_rendezvous(const Client& client, Rational t, Rational x);

}  // namespace linecollab
