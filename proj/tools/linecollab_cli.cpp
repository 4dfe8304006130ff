// Command-line front end; talks to the library through the C interface only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linecollab/linecollab.h"

namespace {

constexpr int kExitUsage = 1;

struct Failure {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"cannot write '" + path + "'"};
}

void check(lcb_status status) {
  if (status != LCB_OK) throw Failure{lcb_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  lcb_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Owned {
  T* ptr = nullptr;
  ~Owned() { Free(ptr); }
};

using InstanceHandle = Owned<lcb_instance, lcb_instance_free>;
using SolutionHandle = Owned<lcb_solution, lcb_solution_free>;
using ResultHandle = Owned<lcb_result, lcb_result_free>;

void load_instance(const std::string& path, InstanceHandle& inst) {
  check(lcb_instance_parse(slurp(path).c_str(), &inst.ptr));
}

void load_solution(const InstanceHandle& inst, const std::string& path, SolutionHandle& sol) {
  check(lcb_solution_parse(inst.ptr, slurp(path).c_str(), &sol.ptr));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for line routing with collaborating mobile clients"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string solve_instance;
  std::string method = "auto";
  std::string objective = "makespan";
  std::string resolution = "1/64";
  std::size_t cap = 0;
  std::string solve_out;
  std::string solve_report;
  bool timing = false;
  bool no_dominance = false;
  solve->add_option("instance", solve_instance, "Instance JSON")->required();
  solve->add_option("--method", method, "auto|thm1|thm2|thm3|dp1|dp2|dp3|oracle|grid|greedy")
      ->check(CLI::IsMember({"auto", "thm1", "thm2", "thm3", "dp1", "dp2", "dp3", "oracle", "grid", "greedy"}));
  solve->add_option("--objective", objective, "makespan|sum|feasibility")
      ->check(CLI::IsMember({"makespan", "sum", "feasibility"}));
  solve->add_option("--resolution", resolution, "Grid step p/q");
  solve->add_option("--cap", cap, "Oracle client cap");
  solve->add_option("--out", solve_out, "Solution file");
  solve->add_option("--report", solve_report, "Report file (default stdout)");
  solve->add_flag("--timing", timing, "Add wall time to the report");
  solve->add_flag("--no-dominance", no_dominance, "Disable dominance pruning in dp3");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a solution against an instance");
  std::string val_instance;
  std::string val_solution;
  std::string val_report;
  validate->add_option("instance", val_instance)->required();
  validate->add_option("solution", val_solution)->required();
  validate->add_option("--report", val_report, "Report file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  std::string speed = "slow";
  std::string windows = "none";
  std::string processing = "zero";
  std::size_t n = 5;
  std::uint64_t seed = 1;
  std::optional<long> den;
  std::optional<long> pos_max;
  std::optional<long> release_max;
  std::optional<long> deadline_min;
  std::optional<long> deadline_max;
  std::optional<long> tau_max;
  std::optional<std::string> gen_v;
  std::string gen_out;
  gen->add_option("--speed", speed)->check(CLI::IsMember({"slow", "fast", "unit"}));
  gen->add_option("--windows", windows)->check(CLI::IsMember({"none", "release", "deadline", "timewindows"}));
  gen->add_option("--processing", processing)->check(CLI::IsMember({"zero", "general"}));
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("--den", den, "Common denominator of all values");
  gen->add_option("--pos-max", pos_max);
  gen->add_option("--release-max", release_max);
  gen->add_option("--deadline-min", deadline_min, "Lower bound on d - r");
  gen->add_option("--deadline-max", deadline_max, "Upper bound on d - r");
  gen->add_option("--tau-max", tau_max);
  gen->add_option("--v", gen_v, "Client speed p/q");
  gen->add_option("--out", gen_out);

  // plot
  auto* plot = app.add_subcommand("plot", "Render a time-space diagram");
  std::string plot_instance;
  std::string plot_solution;
  std::string plot_out;
  plot->add_option("instance", plot_instance)->required();
  plot->add_option("solution", plot_solution)->required();
  plot->add_option("--out", plot_out, "SVG file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string bench_config;
  std::string bench_out;
  bench->add_option("config", bench_config, "Suite JSON")->required();
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Hardness constructions");
  reduce->require_subcommand(1);
  auto* three = reduce->add_subcommand("3partition", "3-Partition to a deadline instance");
  std::string three_file;
  std::string three_v = "1/2";
  std::string three_out;
  three->add_option("--file", three_file, "Items JSON {m, B, items}")->required();
  three->add_option("--v", three_v, "Client speed p/q");
  three->add_option("--out", three_out);
  auto* embed = reduce->add_subcommand("embed", "Slow-velocity embedding of a stationary instance");
  std::string embed_instance;
  std::string embed_objective = "makespan";
  std::string embed_out;
  embed->add_option("instance", embed_instance)->required();
  embed->add_option("--objective", embed_objective)->check(CLI::IsMember({"makespan", "sum"}));
  embed->add_option("--out", embed_out);

  // table
  auto* table = app.add_subcommand("table", "Print the dispatch table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      InstanceHandle inst;
      load_instance(solve_instance, inst);
      lcb_solve_options opt;
      lcb_solve_options_init(&opt);
      opt.method = method.c_str();
      opt.objective = objective.c_str();
      opt.resolution = resolution.c_str();
      opt.cap = cap;
      opt.trp_dominance = no_dominance ? 0 : 1;
      opt.timing = timing ? 1 : 0;
      ResultHandle res;
      check(lcb_solve(inst.ptr, &opt, &res.ptr));
      char* report = nullptr;
      check(lcb_result_report(res.ptr, &report));
      emit(solve_report, take(report));
      const int code = lcb_result_exit_code(res.ptr);
      if (code == 0 && !solve_out.empty()) {
        SolutionHandle sol;
        check(lcb_result_solution(res.ptr, &sol.ptr));
        char* text = nullptr;
        check(lcb_solution_to_json(sol.ptr, &text));
        emit(solve_out, take(text));
      }
      return code;
    }
    if (*validate) {
      InstanceHandle inst;
      load_instance(val_instance, inst);
      SolutionHandle sol;
      load_solution(inst, val_solution, sol);
      int feasible = 0;
      char* report = nullptr;
      check(lcb_validate(inst.ptr, sol.ptr, &feasible, &report));
      emit(val_report, take(report));
      return feasible ? 0 : 2;
    }
    if (*gen) {
      nlohmann::ordered_json spec;
      spec["speed"] = speed;
      spec["windows"] = windows;
      spec["processing"] = processing;
      spec["n"] = n;
      spec["seed"] = seed;
      if (den) spec["den"] = *den;
      if (pos_max) spec["pos_max"] = *pos_max;
      if (release_max) spec["release_max"] = *release_max;
      if (deadline_min) spec["deadline_min"] = *deadline_min;
      if (deadline_max) spec["deadline_max"] = *deadline_max;
      if (tau_max) spec["tau_max"] = *tau_max;
      if (gen_v) spec["v"] = *gen_v;
      InstanceHandle inst;
      check(lcb_generate(spec.dump().c_str(), &inst.ptr));
      char* text = nullptr;
      check(lcb_instance_to_json(inst.ptr, &text));
      emit(gen_out, take(text));
      return 0;
    }
    if (*plot) {
      InstanceHandle inst;
      load_instance(plot_instance, inst);
      SolutionHandle sol;
      load_solution(inst, plot_solution, sol);
      char* svg = nullptr;
      const lcb_status st = lcb_plot_svg(inst.ptr, sol.ptr, &svg);
      if (st == LCB_ERR_INFEASIBLE) {
        std::cerr << "error: " << lcb_last_error() << "\n";
        return 2;
      }
      check(st);
      emit(plot_out, take(svg));
      return 0;
    }
    if (*bench) {
      char* csv = nullptr;
      check(lcb_bench(slurp(bench_config).c_str(), &csv));
      emit(bench_out, take(csv));
      return 0;
    }
    if (*three) {
      InstanceHandle inst;
      check(lcb_reduce_3partition(slurp(three_file).c_str(), three_v.c_str(), &inst.ptr));
      char* text = nullptr;
      check(lcb_instance_to_json(inst.ptr, &text));
      emit(three_out, take(text));
      return 0;
    }
    if (*embed) {
      InstanceHandle inst;
      load_instance(embed_instance, inst);
      InstanceHandle out;
      check(lcb_reduce_embed(inst.ptr, embed_objective.c_str(), &out.ptr));
      char* text = nullptr;
      check(lcb_instance_to_json(out.ptr, &text));
      emit(embed_out, take(text));
      return 0;
    }
    if (*table) {
      char* text = nullptr;
      check(lcb_dispatch_table(&text));
      emit("", take(text));
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
