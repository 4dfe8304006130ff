#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "linecollab/model.hpp"

namespace linecollab::reductions {

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ThreePartitionInput {
  std::int64_t m = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> items;
};

/// Throws ReductionError unless there are 3m items summing to mB, each
/// strictly between B/4 and B/2.
void validate(const ThreePartitionInput& input);

/// JSON {"m": 2, "B": 10, "items": [...]}.
ThreePartitionInput parse_three_partition(std::string_view text);

/// 3m clients at the origin (tau = item, d = mB) and m-1 clients with zero
/// processing, deadline jB and |s| = v jB, on the right for odd j and on the
/// left for even j. Feasible iff the items split into m triples of sum B.
Instance reduce_3partition(const ThreePartitionInput& input, const Rational& v = Rational(1, 2));

/// n (r_max + 2 s_max + tau_max).
Rational k_bound(const Instance& instance);

/// Same clients with v = 1/(nK + 1) for the makespan and
/// v = 1/(n(n+1)/2 K + 1) for the sum of completion times.
Instance embed_slow(const Instance& stationary, Objective objective);

}  // namespace linecollab::reductions
