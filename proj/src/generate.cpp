#include "linecollab/generate.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace linecollab::generate {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish integer in [lo, hi] by modulo reduction; portable across
  // standard libraries, unlike std::uniform_int_distribution.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

  Rational grid(long lo, long hi, long den) { return Rational(integer(lo * den, hi * den), den); }

 private:
  std::mt19937_64 rng_;
};

void reject(const std::string& what) { throw std::invalid_argument(what); }

bool has_release(Windows w) { return w == Windows::ReleaseOnly || w == Windows::TimeWindows; }
bool has_deadline(Windows w) { return w == Windows::DeadlineOnly || w == Windows::TimeWindows; }

}  // namespace

Instance generate(const Spec& spec) {
  if (spec.den <= 0) reject("den must be positive");
  if (spec.pos_max < 0) reject("pos-max must be non-negative");
  if (spec.release_max && !has_release(spec.windows) && *spec.release_max > 0) {
    reject("release range given for windows '" + to_string(spec.windows) + "'");
  }
  if ((spec.deadline_min || spec.deadline_max) && !has_deadline(spec.windows)) {
    reject("deadline range given for windows '" + to_string(spec.windows) + "'");
  }
  if (spec.tau_max && spec.processing == Processing::Zero && *spec.tau_max > 0) {
    reject("processing range given for zero processing");
  }
  const long release_max = spec.release_max.value_or(10);
  const long deadline_min = spec.deadline_min.value_or(2 * spec.pos_max);
  const long deadline_max = spec.deadline_max.value_or(6 * spec.pos_max);
  const long tau_max = spec.tau_max.value_or(5);
  if (has_release(spec.windows) && release_max <= 0) reject("release-max must be positive");
  if (has_deadline(spec.windows) && (deadline_min < 0 || deadline_max < deadline_min)) {
    reject("deadline range must satisfy 0 <= min <= max");
  }
  if (spec.processing == Processing::General && tau_max <= 0) reject("tau-max must be positive");

  Draw draw(spec.seed);
  Rational v;
  if (spec.v) {
    v = *spec.v;
    const Speed got = v < Rational(1) ? Speed::Slow : (v > Rational(1) ? Speed::Fast : Speed::Unit);
    if (v.sign() <= 0 || got != spec.speed) {
      reject("v = " + v.str() + " does not match speed '" + to_string(spec.speed) + "'");
    }
  } else if (spec.speed == Speed::Slow) {
    v = Rational(draw.integer(1, 9), 10);
  } else if (spec.speed == Speed::Fast) {
    v = Rational(draw.integer(11, 30), 10);
  } else {
    v = Rational(1);
  }

  std::vector<Client> clients;
  for (std::size_t k = 0; k < spec.n; ++k) {
    Client a{"c" + std::to_string(k + 1), draw.grid(-spec.pos_max, spec.pos_max, spec.den), Rational(0),
             std::nullopt, Rational(0)};
    if (has_release(spec.windows)) a.r = draw.grid(0, release_max, spec.den);
    if (has_deadline(spec.windows)) a.d = a.r + draw.grid(deadline_min, deadline_max, spec.den);
    if (spec.processing == Processing::General) a.tau = draw.grid(0, tau_max, spec.den);
    clients.push_back(std::move(a));
  }
  if (!clients.empty()) {
    // Pin the cell when the draws happened to miss it.
    Client& first = clients.front();
    const Rational step(1, spec.den);
    auto any = [&](auto pred) {
      for (const Client& a : clients) {
        if (pred(a)) return true;
      }
      return false;
    };
    if (has_release(spec.windows) && !any([](const Client& a) { return a.r.sign() > 0; })) {
      first.r = step;
      if (first.d) first.d = *first.d + step;
    }
    if (spec.processing == Processing::General && !any([](const Client& a) { return a.tau.sign() > 0; })) {
      first.tau = step;
    }
  }
  return Instance(v, std::move(clients));
}

}  // namespace linecollab::generate
