#include "linecollab/bench.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "linecollab/generate.hpp"

namespace linecollab::bench {

namespace {

std::string variant_name(const Case& c) {
  return to_string(c.speed) + "/" + to_string(c.windows) + "/" + to_string(c.processing);
}

std::string ratio(double now, double before) {
  if (before <= 0) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", now / before);
  return buf;
}

}  // namespace

std::vector<Case> parse_config(std::string_view text) {
  std::vector<Case> out;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ModelError(ModelErrorKind::Malformed, "bench config must be a JSON list");
    for (const auto& item : doc) {
      Case c;
      const std::string variant = item.at("variant").get<std::string>();
      const auto a = variant.find('/');
      const auto b = variant.find('/', a == std::string::npos ? a : a + 1);
      if (a == std::string::npos || b == std::string::npos) {
        throw ModelError(ModelErrorKind::Malformed, "variant '" + variant + "' is not speed/windows/processing");
      }
      c.speed = parse_speed(variant.substr(0, a));
      c.windows = parse_windows(variant.substr(a + 1, b - a - 1));
      c.processing = parse_processing(variant.substr(b + 1));
      c.sizes = item.at("sizes").get<std::vector<std::size_t>>();
      c.seeds = item.at("seeds").get<std::vector<std::uint64_t>>();
      if (item.contains("method")) c.method = dispatch::parse_method(item["method"].get<std::string>());
      if (item.contains("objective")) c.objective = parse_objective(item["objective"].get<std::string>());
      out.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(ModelErrorKind::Malformed, std::string("bench config: ") + e.what());
  }
  return out;
}

std::string run(const std::vector<Case>& cases) {
  std::ostringstream csv;
  csv << "variant,method,objective,n,n_left,n_right,seed,status,value,value_exact,states,state_bound,"
         "wall_ms,states_ratio,wall_ratio\n";
  for (const Case& c : cases) {
    std::map<std::uint64_t, std::pair<double, double>> previous;  // seed -> (states, wall)
    for (std::size_t n : c.sizes) {
      for (std::uint64_t seed : c.seeds) {
        generate::Spec spec;
        spec.speed = c.speed;
        spec.windows = c.windows;
        spec.processing = c.processing;
        spec.n = n;
        spec.seed = seed;
        const Instance inst = generate::generate(spec);
        const SideSplit sides = split_sides(inst);
        dispatch::SolveOptions opt;
        opt.method = c.method;
        opt.objective = c.objective;

        const auto start = std::chrono::steady_clock::now();
        const dispatch::Outcome res = dispatch::solve(inst, opt);
        const double wall =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        std::string value;
        std::string exact;
        if (res.status == dispatch::Status::Solved) {
          const Rational& v = c.objective == Objective::SumCompletion ? res.c_sum : res.c_max;
          value = v.decimal(12);
          exact = v.str();
        }
        const std::size_t bound = 2 * (sides.left.size() + 1) * (sides.right.size() + 1);
        const double states = static_cast<double>(res.states_explored);
        std::string sr;
        std::string wr;
        if (auto it = previous.find(seed); it != previous.end()) {
          sr = ratio(states, it->second.first);
          wr = ratio(wall, it->second.second);
        }
        previous[seed] = {states, wall};
        char wall_text[32];
        std::snprintf(wall_text, sizeof wall_text, "%.3f", wall);
        csv << variant_name(c) << ',' << dispatch::to_string(res.method) << ',' << to_string(c.objective) << ','
            << n << ',' << sides.left.size() << ',' << sides.right.size() << ',' << seed << ','
            << dispatch::to_string(res.status) << ',' << value << ',' << exact << ',' << res.states_explored << ','
            << bound << ',' << wall_text << ',' << sr << ',' << wr << '\n';
      }
    }
  }
  return csv.str();
}

}  // namespace linecollab::bench
