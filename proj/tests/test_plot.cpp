#include <doctest.h>

#include <string>

#include "linecollab/io.hpp"
#include "linecollab/plot.hpp"

using namespace linecollab;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::string group(const std::string& svg, const std::string& id) {
  const auto from = svg.find("<g id=\"" + id + "\">");
  return svg.substr(from, svg.find("</g>", from) - from);
}

}  // namespace

TEST_CASE("single client pendulum") {
  const Instance inst(Rational(1, 2), {{"r", 3, 0, std::nullopt, 0}});
  Solution s;
  s.sequence = {"r"};
  s.rendezvous = {make_rendezvous(inst.client("r"), 2, 2)};
  s.return_time = 4;
  const std::string svg = plot::render_svg(inst, s);
  CHECK(count(group(svg, "server"), "<line") == 2);
  CHECK(count(group(svg, "clients"), "<line") == 1);
  CHECK(count(group(svg, "clients"), "stroke-dasharray") == 1);
  CHECK(count(group(svg, "events"), "fill=\"white\"") == 1);
  CHECK(count(group(svg, "events"), "fill=\"black\"") == 0);
  CHECK(svg == plot::render_svg(inst, s));
}

TEST_CASE("empty instance draws axes only") {
  const std::string svg = plot::render_svg(Instance(Rational(1, 2), {}), Solution{});
  CHECK(count(group(svg, "axes"), "<line") == 2);
  CHECK(count(group(svg, "server"), "<line") == 0);
  CHECK(count(svg, "<circle") == 0);
}

TEST_CASE("infeasible solutions are refused") {
  const Instance inst(Rational(1, 2), {{"r", 3, 0, std::nullopt, 0}});
  Solution s;
  s.sequence = {"r"};
  s.rendezvous = {make_rendezvous(inst.client("r"), 1, 2)};
  s.return_time = 4;
  CHECK_THROWS_AS(plot::render_svg(inst, s), plot::PlotError);
}

TEST_CASE("golden diagram") {
  const std::string dir = LCB_GOLDEN_DIR;
  const Instance inst = io::read_instance(io::read_file(dir + "/three.json"));
  const Solution sol = io::read_solution(io::read_file(dir + "/three_solution.json"), inst);
  const std::string svg = plot::render_svg(inst, sol);
  CHECK(svg == io::read_file(dir + "/three.svg"));
  CHECK(count(group(svg, "events"), "fill=\"black\"") == 2);
}
