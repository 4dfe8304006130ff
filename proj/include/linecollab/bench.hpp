#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linecollab/dispatch.hpp"
#include "linecollab/model.hpp"

namespace linecollab::bench {

struct Case {
  Speed speed = Speed::Slow;
  Windows windows = Windows::None;
  Processing processing = Processing::Zero;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  dispatch::Method method = dispatch::Method::Auto;
  Objective objective = Objective::Makespan;
};

/// JSON list of {"variant": "slow/deadline/zero", "sizes": [..], "seeds": [..],
/// "method": "dp1", "objective": "makespan"}; method and objective optional.
std::vector<Case> parse_config(std::string_view text);

/// One CSV row per (case, size, seed), with a header. Values appear as a
/// 12-significant-digit decimal and as exact p/q; the ratio columns compare
/// against the previous size of the same case and seed.
std::string run(const std::vector<Case>& cases);

}  // namespace linecollab::bench
