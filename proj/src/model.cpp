#include "linecollab/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace linecollab {

Instance::Instance(Rational v, std::vector<Client> clients)
    : v_(std::move(v)), clients_(std::move(clients)) {
  if (v_.sign() <= 0) {
    throw ModelError(ModelErrorKind::NonPositiveSpeed, "client speed must be positive, got " + v_.str());
  }
  std::unordered_set<std::string> seen;
  for (const auto& c : clients_) {
    if (!seen.insert(c.id).second) {
      throw ModelError(ModelErrorKind::DuplicateId, "duplicate client id '" + c.id + "'");
    }
    if (c.r.sign() < 0) {
      throw ModelError(ModelErrorKind::NegativeValue, "client '" + c.id + "' has negative release date");
    }
    if (c.tau.sign() < 0) {
      throw ModelError(ModelErrorKind::NegativeValue, "client '" + c.id + "' has negative processing time");
    }
    if (c.d && c.r > *c.d) {
      throw ModelError(ModelErrorKind::ReleaseAfterDeadline,
                       "client '" + c.id + "' has release " + c.r.str() + " after deadline " + c.d->str());
    }
  }
}

std::optional<std::size_t> Instance::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < clients_.size(); ++i) {
    if (clients_[i].id == id) return i;
  }
  return std::nullopt;
}

const Client& Instance::client(std::string_view id) const {
  if (auto i = index_of(id)) return clients_[*i];
  throw ModelError(ModelErrorKind::UnknownClient, "unknown client id '" + std::string(id) + "'");
}

VariantSignature classify(const Instance& instance, Objective objective) {
  VariantSignature sig;
  const Rational one(1);
  if (instance.v() < one) {
    sig.speed = Speed::Slow;
  } else if (instance.v() > one) {
    sig.speed = Speed::Fast;
  } else {
    sig.speed = Speed::Unit;
  }

  bool any_release = false;
  bool any_deadline = false;
  bool any_processing = false;
  for (const auto& a : instance.clients()) {
    any_release |= a.r.sign() > 0;
    any_deadline |= a.d.has_value();
    any_processing |= a.tau.sign() > 0;
  }
  if (any_release && any_deadline) {
    sig.windows = Windows::TimeWindows;
  } else if (any_release) {
    sig.windows = Windows::ReleaseOnly;
  } else if (any_deadline) {
    sig.windows = Windows::DeadlineOnly;
  } else {
    sig.windows = Windows::None;
  }
  sig.processing = any_processing ? Processing::General : Processing::Zero;
  sig.objective = objective;
  return sig;
}

std::string to_string(Speed s) {
  switch (s) {
    case Speed::Slow: return "slow";
    case Speed::Fast: return "fast";
    case Speed::Unit: return "unit";
  }
  return "?";
}

std::string to_string(Windows w) {
  switch (w) {
    case Windows::None: return "none";
    case Windows::ReleaseOnly: return "release";
    case Windows::DeadlineOnly: return "deadline";
    case Windows::TimeWindows: return "timewindows";
  }
  return "?";
}

std::string to_string(Processing p) { return p == Processing::Zero ? "zero" : "general"; }

std::string to_string(Objective o) {
  switch (o) {
    case Objective::Makespan: return "makespan";
    case Objective::SumCompletion: return "sum";
    case Objective::FeasibilityOnly: return "feasibility";
  }
  return "?";
}

std::string to_string(const VariantSignature& sig) {
  return "(" + to_string(sig.speed) + ", " + to_string(sig.windows) + ", " + to_string(sig.processing) +
         ", " + to_string(sig.objective) + ")";
}

namespace {
[[noreturn]] void bad_token(std::string_view what, std::string_view s) {
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(s) + "'");
}
}  // namespace

Speed parse_speed(std::string_view s) {
  if (s == "slow") return Speed::Slow;
  if (s == "fast") return Speed::Fast;
  if (s == "unit") return Speed::Unit;
  bad_token("speed", s);
}

Windows parse_windows(std::string_view s) {
  if (s == "none") return Windows::None;
  if (s == "release") return Windows::ReleaseOnly;
  if (s == "deadline") return Windows::DeadlineOnly;
  if (s == "timewindows") return Windows::TimeWindows;
  bad_token("time-window class", s);
}

Processing parse_processing(std::string_view s) {
  if (s == "zero") return Processing::Zero;
  if (s == "general") return Processing::General;
  bad_token("processing class", s);
}

Objective parse_objective(std::string_view s) {
  if (s == "makespan") return Objective::Makespan;
  if (s == "sum") return Objective::SumCompletion;
  if (s == "feasibility") return Objective::FeasibilityOnly;
  bad_token("objective", s);
}

SideSplit split_sides(const Instance& instance) {
  SideSplit out;
  for (const auto& c : instance.clients()) {
    (side_of(c) == Side::L ? out.left : out.right).push_back(c);
  }
  auto by_distance = [](const Client& a, const Client& b) {
    const auto da = a.s.abs();
    const auto db = b.s.abs();
    if (da != db) return da < db;
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.id < b.id;
  };
  std::sort(out.left.begin(), out.left.end(), by_distance);
  std::sort(out.right.begin(), out.right.end(), by_distance);
  return out;
}

Rendezvous make_rendezvous(const Client& client, Rational t, Rational x) {
  Rational completion = t + client.tau;
  return Rendezvous{client.id, std::move(t), std::move(x), std::move(completion)};
}

}  // namespace linecollab
