#include "linecollab/kinematics.hpp"

#include <stdexcept>

namespace linecollab::kinematics {

Rational client_position(const Client& client, const Rational& v, const Rational& t,
                         const std::optional<Rational>& bound) {
  if (t < client.r) {
    throw std::invalid_argument("client '" + client.id + "' queried at t=" + t.str() + " before release " +
                                client.r.str());
  }
  const Rational travelled = v * (t - client.r);
  if (side_of(client) == Side::R) {
    Rational pos = client.s - travelled;
    if (bound && pos < *bound) pos = *bound;
    return pos;
  }
  Rational pos = client.s + travelled;
  if (bound && pos > *bound) pos = *bound;
  return pos;
}

Meeting meet_wait_free(const ServerState& server, const Rational& client_pos, const Rational& v) {
  const Rational gap = client_pos - server.x;
  const Rational step = gap / (Rational(1) + v);
  return Meeting{server.t + step.abs(), server.x + step};
}

bool reachable_by_server(const ServerState& prev, const Rational& t, const Rational& x) {
  return t >= prev.t + (x - prev.x).abs();
}

bool reachable_by_client(const Client& client, const Rational& v, const Rational& t, const Rational& x) {
  return t >= client.r + (x - client.s).abs() / v;
}

Rational origin_arrival(const Client& client, const Rational& v) { return client.r + client.s.abs() / v; }

Meeting earliest_meeting(const ServerState& server, const Client& client, const Rational& v) {
  if (server.t >= client.r) {
    const Rational reach = v * (server.t - client.r);
    const Rational lo = client.s - reach;
    const Rational hi = client.s + reach;
    if (server.x >= lo && server.x <= hi) return Meeting{server.t, server.x};
    // The client's nearest reachable point closes in on the server.
    return meet_wait_free(server, server.x < lo ? lo : hi, v);
  }
  // Client still parked at s until r.
  const Rational wait = client.r - server.t;
  const Rational gap = client.s - server.x;
  if (gap.abs() <= wait) return Meeting{client.r, client.s};
  const Rational moved = gap.sign() > 0 ? wait : -wait;
  return meet_wait_free(ServerState{client.r, server.x + moved}, client.s, v);
}

}  // namespace linecollab::kinematics
