#pragma once

#include <string>
#include <vector>

#include "linecollab/model.hpp"

namespace linecollab::validator {

enum class ViolationKind {
  ServerUnreachable,  // t_i < c_{i-1} + |x_i - x_{i-1}|
  ClientUnreachable,  // t(a) < r(a) + |x(a) - s(a)| / v
  BeforeRelease,      // t(a) < r(a)
  AfterDeadline,      // t(a) > d(a)
  ReturnUnreachable,  // return_time < c_n + |x_n|
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string client_id;  // empty for the return event
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Throws ModelError(Structure) unless the sequence is a permutation of the
/// instance ids and the rendezvous list is aligned with it.
void check_structure(const Instance& instance, const Solution& solution);

/// Checks every rendezvous and the return event, collecting all violations in
/// sequence order (server, client, release, deadline per rendezvous, then the
/// return). Structural mismatches throw as in check_structure.
Verdict check_feasible(const Instance& instance, const Solution& solution);

struct Objectives {
  Rational c_max;
  Rational c_sum;
};

Objectives objectives(const Instance& instance, const Solution& solution);

/// Within each side, strictly nearer clients are met strictly earlier.
bool is_order_preserving(const Instance& instance, const Solution& solution);

/// t_i = c_{i-1} + |x_i - x_{i-1}| for every rendezvous and the return.
bool is_wait_free(const Instance& instance, const Solution& solution);

/// t(a) = max{ r(a) + |s(a) - x(a)| / v, c_{i-1} } for every client: the
/// client runs straight to the meeting point and only ever waits for the
/// server. On the origin side of s this is exactly the one-directional form.
bool is_colliding(const Instance& instance, const Solution& solution);

/// Raised when normalize is asked for a variant its rewrites do not cover.
class NormalizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewrites a feasible solution into an order-preserving (where the
/// order-preservation rewrite applies), wait-free, colliding one with an
/// objective no larger than the input's.
///
/// Supported: slow clients (v < 1) without release dates, and
///   - makespan / feasibility with zero processing (deadlines allowed),
///   - makespan with general processing and no deadlines,
///   - makespan with general processing and deadlines (no reordering),
///   - sum of completions with zero processing (deadlines allowed).
/// Everything else throws NormalizeError. Idempotent.
Solution normalize(const Instance& instance, const Solution& solution, Objective objective);

}  // namespace linecollab::validator
