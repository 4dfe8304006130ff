#pragma once

#include <optional>

#include "linecollab/model.hpp"

namespace linecollab::kinematics {

/// Server time and position, usually right after a completion.
struct ServerState {
  Rational t;
  Rational x;
};

struct Meeting {
  Rational t;
  Rational x;
  bool operator==(const Meeting&) const = default;
};

/// Position at time t of a client that heads toward the origin at full speed
/// from its release date: s - v(t - r) on the right side, s + v(t - r) on the
/// left. With `bound` set the motion stops there (the meeting point).
/// Throws std::invalid_argument when t < r.
Rational client_position(const Client& client, const Rational& v, const Rational& t,
                         const std::optional<Rational>& bound = std::nullopt);

/// Head-on closing at combined speed 1 + v between the server and a client
/// currently at `client_pos`.
Meeting meet_wait_free(const ServerState& server, const Rational& client_pos, const Rational& v);

/// t_i >= c_{i-1} + |x_i - x_{i-1}|.
bool reachable_by_server(const ServerState& prev, const Rational& t, const Rational& x);

/// t >= r + |x - s| / v.
bool reachable_by_client(const Client& client, const Rational& v, const Rational& t, const Rational& x);

/// r + |s| / v.
Rational origin_arrival(const Client& client, const Rational& v);

/// Earliest (t, x) at which a server leaving `server` can meet `client`.
///
/// The client idles at s until r and then moves at speed v. The result is the
/// lowest point of the intersection of the server's reachable cone (slope 1)
/// and the client's (slope v, apex at (r, s)); it is unique. Three regimes:
/// the server already stands inside the client's reach (meet on the spot),
/// the client is unreleased (server walks toward s, possibly waiting there),
/// or both close head-on via meet_wait_free.
Meeting earliest_meeting(const ServerState& server, const Client& client, const Rational& v);

}  // namespace linecollab::kinematics
