#include "linecollab/linecollab.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "linecollab/bench.hpp"
#include "linecollab/dispatch.hpp"
#include "linecollab/generate.hpp"
#include "linecollab/io.hpp"
#include "linecollab/oracle.hpp"
#include "linecollab/plot.hpp"
#include "linecollab/reductions.hpp"
#include "linecollab/validator.hpp"

using namespace linecollab;
using ojson = nlohmann::ordered_json;

struct lcb_instance {
  Instance value;
};

struct lcb_solution {
  Solution value;
};

struct lcb_result {
  dispatch::Outcome outcome;
  std::optional<double> wall_ms;
};

namespace {

thread_local std::string g_last_error;

lcb_status fail(lcb_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
lcb_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LCB_OK;
  } catch (const ModelError& e) {
    switch (e.kind()) {
      case ModelErrorKind::Malformed: return fail(LCB_ERR_PARSE, e.what());
      case ModelErrorKind::Structure:
      case ModelErrorKind::UnknownClient: return fail(LCB_ERR_STRUCTURE, e.what());
      default: return fail(LCB_ERR_INVALID_INSTANCE, e.what());
    }
  } catch (const VariantMismatch& e) {
    return fail(LCB_ERR_VARIANT, e.what());
  } catch (const validator::NormalizeError& e) {
    return fail(LCB_ERR_VARIANT, e.what());
  } catch (const oracle::OracleError& e) {
    return fail(LCB_ERR_ORACLE, e.what());
  } catch (const plot::PlotError& e) {
    return fail(LCB_ERR_INFEASIBLE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LCB_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LCB_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(LCB_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LCB_ERR_INTERNAL, e.what());
  }
}

#define LCB_REQUIRE(cond)                                             \
  do {                                                                \
    if (!(cond)) return fail(LCB_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

void put_rational(ojson& j, const std::string& key, const Rational& r) {
  j[key] = r.str();
  j[key + "_decimal"] = r.decimal(12);
}

ojson variant_json(const VariantSignature& sig) {
  ojson j;
  j["speed"] = to_string(sig.speed);
  j["windows"] = to_string(sig.windows);
  j["processing"] = to_string(sig.processing);
  j["objective"] = to_string(sig.objective);
  return j;
}

Objective objective_or_default(const char* text) {
  return text ? parse_objective(text) : Objective::Makespan;
}

}  // namespace

extern "C" {

const char* lcb_last_error(void) { return g_last_error.c_str(); }

void lcb_string_free(char* s) { std::free(s); }

lcb_status lcb_instance_parse(const char* json, lcb_instance** out) {
  LCB_REQUIRE(json && out);
  return guarded([&] { *out = new lcb_instance{io::read_instance(json)}; });
}

lcb_status lcb_instance_to_json(const lcb_instance* inst, char** out) {
  LCB_REQUIRE(inst && out);
  return guarded([&] { *out = dup(io::write_instance(inst->value)); });
}

size_t lcb_instance_size(const lcb_instance* inst) { return inst ? inst->value.size() : 0; }

lcb_status lcb_instance_classify(const lcb_instance* inst, const char* objective, char** out) {
  LCB_REQUIRE(inst && out);
  return guarded([&] {
    const auto sig = classify(inst->value, objective ? parse_objective(objective) : Objective::FeasibilityOnly);
    *out = dup(variant_json(sig).dump(2) + "\n");
  });
}

void lcb_instance_free(lcb_instance* inst) { delete inst; }

lcb_status lcb_solution_parse(const lcb_instance* inst, const char* json, lcb_solution** out) {
  LCB_REQUIRE(inst && json && out);
  return guarded([&] { *out = new lcb_solution{io::read_solution(json, inst->value)}; });
}

lcb_status lcb_solution_to_json(const lcb_solution* sol, char** out) {
  LCB_REQUIRE(sol && out);
  return guarded([&] { *out = dup(io::write_solution(sol->value)); });
}

void lcb_solution_free(lcb_solution* sol) { delete sol; }

void lcb_solve_options_init(lcb_solve_options* opt) {
  if (!opt) return;
  opt->method = nullptr;
  opt->objective = nullptr;
  opt->resolution = nullptr;
  opt->cap = 0;
  opt->trp_dominance = 1;
  opt->timing = 0;
}

lcb_status lcb_solve(const lcb_instance* inst, const lcb_solve_options* opt, lcb_result** out) {
  LCB_REQUIRE(inst && out);
  return guarded([&] {
    lcb_solve_options defaults;
    lcb_solve_options_init(&defaults);
    const lcb_solve_options& o = opt ? *opt : defaults;
    dispatch::SolveOptions so;
    if (o.method) so.method = dispatch::parse_method(o.method);
    so.objective = objective_or_default(o.objective);
    if (o.resolution) so.resolution = Rational::parse(o.resolution);
    if (o.cap > 0) so.cap = o.cap;
    so.trp_dominance = o.trp_dominance != 0;
    const auto start = std::chrono::steady_clock::now();
    auto result = std::make_unique<lcb_result>();
    result->outcome = dispatch::solve(inst->value, so);
    if (o.timing) {
      result->wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    *out = result.release();
  });
}

int lcb_result_exit_code(const lcb_result* res) { return res ? dispatch::exit_code(res->outcome.status) : 1; }

lcb_status lcb_result_solution(const lcb_result* res, lcb_solution** out) {
  LCB_REQUIRE(res && out);
  if (!res->outcome.solution) return fail(LCB_ERR_ARGUMENT, "result carries no solution");
  return guarded([&] { *out = new lcb_solution{*res->outcome.solution}; });
}

lcb_status lcb_result_report(const lcb_result* res, char** out) {
  LCB_REQUIRE(res && out);
  return guarded([&] {
    const dispatch::Outcome& o = res->outcome;
    ojson j;
    j["status"] = dispatch::to_string(o.status);
    j["exit_code"] = dispatch::exit_code(o.status);
    j["variant"] = variant_json(o.variant);
    j["method"] = dispatch::to_string(o.method);
    if (!o.citation.empty()) j["citation"] = o.citation;
    if (o.status == dispatch::Status::Solved) {
      put_rational(j, "objective_value", o.variant.objective == Objective::SumCompletion ? o.c_sum : o.c_max);
      put_rational(j, "c_max", o.c_max);
      put_rational(j, "c_sum", o.c_sum);
    }
    if (o.status == dispatch::Status::Solved || o.status == dispatch::Status::Infeasible) {
      j["states_explored"] = o.states_explored;
    }
    if (o.lower && o.upper) {
      ojson g;
      put_rational(g, "lower", *o.lower);
      put_rational(g, "upper", *o.upper);
      j["grid"] = g;
    }
    if (o.t_bound) {
      ojson r;
      put_rational(r, "t_bound", *o.t_bound);
      put_rational(r, "max_t", *o.max_t);
      r["states_above_bound"] = *o.states_above_bound;
      j["repairman"] = r;
    }
    if (res->wall_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *res->wall_ms);
      j["wall_ms"] = buf;
    }
    *out = dup(j.dump(2) + "\n");
  });
}

void lcb_result_free(lcb_result* res) { delete res; }

lcb_status lcb_validate(const lcb_instance* inst, const lcb_solution* sol, int* feasible, char** report) {
  LCB_REQUIRE(inst && sol && feasible && report);
  return guarded([&] {
    const auto verdict = validator::check_feasible(inst->value, sol->value);
    ojson j;
    j["feasible"] = verdict.ok();
    ojson list = ojson::array();
    for (const auto& v : verdict.violations) {
      ojson item;
      item["kind"] = validator::to_string(v.kind);
      item["client"] = v.client_id;
      item["detail"] = v.detail;
      list.push_back(item);
    }
    j["violations"] = list;
    const auto obj = validator::objectives(inst->value, sol->value);
    put_rational(j, "c_max", obj.c_max);
    put_rational(j, "c_sum", obj.c_sum);
    j["order_preserving"] = validator::is_order_preserving(inst->value, sol->value);
    j["wait_free"] = validator::is_wait_free(inst->value, sol->value);
    j["colliding"] = validator::is_colliding(inst->value, sol->value);
    *feasible = verdict.ok() ? 1 : 0;
    *report = dup(j.dump(2) + "\n");
  });
}

lcb_status lcb_normalize(const lcb_instance* inst, const lcb_solution* sol, const char* objective,
                         lcb_solution** out) {
  LCB_REQUIRE(inst && sol && out);
  return guarded([&] {
    *out = new lcb_solution{validator::normalize(inst->value, sol->value, objective_or_default(objective))};
  });
}

lcb_status lcb_generate(const char* spec_json, lcb_instance** out) {
  LCB_REQUIRE(spec_json && out);
  return guarded([&] {
    const auto j = nlohmann::json::parse(spec_json);
    generate::Spec spec;
    spec.speed = parse_speed(j.at("speed").get<std::string>());
    spec.windows = parse_windows(j.at("windows").get<std::string>());
    spec.processing = parse_processing(j.at("processing").get<std::string>());
    if (j.contains("n")) spec.n = j["n"].get<std::size_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("den")) spec.den = j["den"].get<long>();
    if (j.contains("pos_max")) spec.pos_max = j["pos_max"].get<long>();
    if (j.contains("release_max")) spec.release_max = j["release_max"].get<long>();
    if (j.contains("deadline_min")) spec.deadline_min = j["deadline_min"].get<long>();
    if (j.contains("deadline_max")) spec.deadline_max = j["deadline_max"].get<long>();
    if (j.contains("tau_max")) spec.tau_max = j["tau_max"].get<long>();
    if (j.contains("v")) spec.v = Rational::parse(j["v"].get<std::string>());
    *out = new lcb_instance{generate::generate(spec)};
  });
}

lcb_status lcb_plot_svg(const lcb_instance* inst, const lcb_solution* sol, char** svg) {
  LCB_REQUIRE(inst && sol && svg);
  return guarded([&] { *svg = dup(plot::render_svg(inst->value, sol->value)); });
}

lcb_status lcb_bench(const char* config_json, char** csv) {
  LCB_REQUIRE(config_json && csv);
  return guarded([&] { *csv = dup(bench::run(bench::parse_config(config_json))); });
}

lcb_status lcb_reduce_3partition(const char* json, const char* v, lcb_instance** out) {
  LCB_REQUIRE(json && out);
  return guarded([&] {
    const auto input = reductions::parse_three_partition(json);
    const Rational speed = v ? Rational::parse(v) : Rational(1, 2);
    *out = new lcb_instance{reductions::reduce_3partition(input, speed)};
  });
}

lcb_status lcb_reduce_embed(const lcb_instance* inst, const char* objective, lcb_instance** out) {
  LCB_REQUIRE(inst && out);
  return guarded(
      [&] { *out = new lcb_instance{reductions::embed_slow(inst->value, objective_or_default(objective))}; });
}

lcb_status lcb_k_bound(const lcb_instance* inst, char** out) {
  LCB_REQUIRE(inst && out);
  return guarded([&] { *out = dup(reductions::k_bound(inst->value).str()); });
}

lcb_status lcb_dispatch_table(char** out) {
  LCB_REQUIRE(out);
  return guarded([&] {
    ojson list = ojson::array();
    for (const auto& row : dispatch::table()) {
      ojson j;
      j["speed"] = row.fast ? "fast-or-unit" : "slow";
      j["windows"] = to_string(row.windows);
      j["processing"] = to_string(row.processing);
      j["objective"] = to_string(row.objective);
      j["status"] = dispatch::to_string(row.status);
      if (row.method) j["method"] = dispatch::to_string(*row.method);
      if (!row.citation.empty()) j["citation"] = row.citation;
      list.push_back(j);
    }
    *out = dup(list.dump(2) + "\n");
  });
}

}  // extern "C"
