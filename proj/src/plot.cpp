#include "linecollab/plot.hpp"

#include <cstdio>
#include <sstream>

#include "linecollab/validator.hpp"

namespace linecollab::plot {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kMargin = 0.05;

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double t_max;
  double x_min;
  double x_max;

  double px(const Rational& t) const {
    return kWidth * kMargin + t.to_double() / t_max * kWidth * (1 - 2 * kMargin);
  }
  double py(const Rational& x) const {
    return kHeight * kMargin + (x_max - x.to_double()) / (x_max - x_min) * kHeight * (1 - 2 * kMargin);
  }
};

}  // namespace

std::string render_svg(const Instance& instance, const Solution& solution) {
  const auto verdict = validator::check_feasible(instance, solution);
  if (!verdict.ok()) {
    std::string what = "refusing to plot an infeasible solution:";
    for (const auto& v : verdict.violations) {
      what += " " + validator::to_string(v.kind) + (v.client_id.empty() ? "" : "(" + v.client_id + ")");
    }
    throw PlotError(what);
  }

  Rational lo(0);
  Rational hi(0);
  for (const Client& a : instance.clients()) {
    lo = min(lo, a.s);
    hi = max(hi, a.s);
  }
  for (const Rendezvous& rv : solution.rendezvous) {
    lo = min(lo, rv.x);
    hi = max(hi, rv.x);
  }
  Frame f{solution.return_time.to_double(), lo.to_double(), hi.to_double()};
  if (f.t_max <= 0) f.t_max = 1;
  if (f.x_max <= f.x_min) {
    f.x_min -= 1;
    f.x_max += 1;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto line = [&](const Rational& t0, const Rational& x0, const Rational& t1, const Rational& x1,
                  const char* style) {
    if (t0 == t1 && x0 == x1) return;
    out << "<line x1=\"" << fmt(f.px(t0)) << "\" y1=\"" << fmt(f.py(x0)) << "\" x2=\"" << fmt(f.px(t1))
        << "\" y2=\"" << fmt(f.py(x1)) << "\" " << style << "/>\n";
  };

  // Axes: time at x = 0, space at t = 0.
  out << "<g id=\"axes\">\n";
  line(Rational(0), Rational(0), solution.return_time.is_zero() ? Rational(1) : solution.return_time, Rational(0),
       "stroke=\"#999999\" stroke-width=\"1\"");
  out << "<line x1=\"" << fmt(f.px(Rational(0))) << "\" y1=\"" << fmt(kHeight * kMargin) << "\" x2=\""
      << fmt(f.px(Rational(0))) << "\" y2=\"" << fmt(kHeight * (1 - kMargin))
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << fmt(kWidth * (1 - kMargin)) << "\" y=\"" << fmt(f.py(Rational(0)) - 4)
      << "\" font-size=\"12\" text-anchor=\"end\">t</text>\n";
  out << "<text x=\"" << fmt(f.px(Rational(0)) + 4) << "\" y=\"" << fmt(kHeight * kMargin + 12)
      << "\" font-size=\"12\">x</text>\n";
  out << "</g>\n";

  const char* dotted = "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2,3\"";
  out << "<g id=\"clients\">\n";
  for (const Rendezvous& rv : solution.rendezvous) {
    const Client& a = instance.client(rv.client_id);
    const Rational arrival = a.r + (rv.x - a.s).abs() / instance.v();
    line(Rational(0), a.s, a.r, a.s, dotted);
    line(a.r, a.s, arrival, rv.x, dotted);
    line(arrival, rv.x, rv.t, rv.x, dotted);
  }
  out << "</g>\n";

  const char* solid = "stroke=\"black\" stroke-width=\"2\"";
  out << "<g id=\"server\">\n";
  Rational t(0);
  Rational x(0);
  for (const Rendezvous& rv : solution.rendezvous) {
    const Rational arrive = t + (rv.x - x).abs();
    line(t, x, arrive, rv.x, solid);
    line(arrive, rv.x, rv.completion, rv.x, solid);
    t = rv.completion;
    x = rv.x;
  }
  const Rational home = t + x.abs();
  line(t, x, home, Rational(0), solid);
  line(home, Rational(0), solution.return_time, Rational(0), solid);
  out << "</g>\n";

  out << "<g id=\"events\">\n";
  for (const Rendezvous& rv : solution.rendezvous) {
    out << "<circle cx=\"" << fmt(f.px(rv.t)) << "\" cy=\"" << fmt(f.py(rv.x))
        << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (rv.completion != rv.t) {
      out << "<circle cx=\"" << fmt(f.px(rv.completion)) << "\" cy=\"" << fmt(f.py(rv.x))
          << "\" r=\"4\" fill=\"black\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace linecollab::plot
