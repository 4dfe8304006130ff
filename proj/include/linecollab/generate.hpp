#pragma once

#include <cstdint>
#include <optional>

#include "linecollab/model.hpp"

namespace linecollab::generate {

/// Random instance family. Every quantity is an integer multiple of 1/den.
/// Ranges that contradict the requested cell (a release range for a cell
/// without release dates, say) are rejected with std::invalid_argument.
struct Spec {
  Speed speed = Speed::Slow;
  Windows windows = Windows::None;
  Processing processing = Processing::Zero;
  std::size_t n = 5;
  std::uint64_t seed = 1;
  long den = 2;
  long pos_max = 10;                  // |s| <= pos_max
  std::optional<long> release_max;    // r in [0, release_max], default 10
  std::optional<long> deadline_min;   // d - r in [deadline_min, deadline_max],
  std::optional<long> deadline_max;   //   defaults 2 pos_max and 6 pos_max
  std::optional<long> tau_max;        // tau in [0, tau_max], default 5
  std::optional<Rational> v;          // default drawn from the speed class
};

/// Deterministic in the spec. Ids are c1..cn. For n >= 1 the instance
/// classifies to (speed, windows, processing).
Instance generate(const Spec& spec);

}  // namespace linecollab::generate
