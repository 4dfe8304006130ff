/* C interface to the line routing solvers. Handles are opaque; every call
 * returns an lcb_status and leaves a message for lcb_last_error() on failure.
 * Strings returned through char** are owned by the caller and released with
 * lcb_string_free. Rationals cross the boundary as "p/q" strings. */
#ifndef LINECOLLAB_H
#define LINECOLLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define LCB_API __declspec(dllexport)
#else
#define LCB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcb_status {
  LCB_OK = 0,
  LCB_ERR_PARSE = 1,            /* malformed JSON or rational */
  LCB_ERR_INVALID_INSTANCE = 2, /* v <= 0, r > d, negative values, duplicate ids */
  LCB_ERR_STRUCTURE = 3,        /* solution does not match the instance */
  LCB_ERR_VARIANT = 4,          /* method or transform outside its cell */
  LCB_ERR_ORACLE = 5,           /* brute-force cap exceeded or bad resolution */
  LCB_ERR_ARGUMENT = 6,         /* bad option value */
  LCB_ERR_INFEASIBLE = 7,       /* operation needs a feasible solution */
  LCB_ERR_INTERNAL = 8
} lcb_status;

typedef struct lcb_instance lcb_instance;
typedef struct lcb_solution lcb_solution;
typedef struct lcb_result lcb_result;

/* Message of the last failed call on this thread ("" if none). */
LCB_API const char* lcb_last_error(void);
LCB_API void lcb_string_free(char* s);

/* Instances */
LCB_API lcb_status lcb_instance_parse(const char* json, lcb_instance** out);
LCB_API lcb_status lcb_instance_to_json(const lcb_instance* inst, char** out);
LCB_API size_t lcb_instance_size(const lcb_instance* inst);
/* JSON object {"speed", "windows", "processing", "objective"}. */
LCB_API lcb_status lcb_instance_classify(const lcb_instance* inst, const char* objective, char** out);
LCB_API void lcb_instance_free(lcb_instance* inst);

/* Solutions */
LCB_API lcb_status lcb_solution_parse(const lcb_instance* inst, const char* json, lcb_solution** out);
LCB_API lcb_status lcb_solution_to_json(const lcb_solution* sol, char** out);
LCB_API void lcb_solution_free(lcb_solution* sol);

/* Solving. NULL strings select the defaults (method "auto", objective
 * "makespan", resolution "1/64"); cap 0 keeps the oracle default. */
typedef struct lcb_solve_options {
  const char* method;     /* auto|thm1|thm2|thm3|dp1|dp2|dp3|oracle|grid|greedy */
  const char* objective;  /* makespan|sum|feasibility */
  const char* resolution; /* grid step */
  size_t cap;
  int trp_dominance; /* nonzero keeps dominance pruning in dp3 */
  int timing;        /* nonzero adds wall_ms to the report */
} lcb_solve_options;

LCB_API void lcb_solve_options_init(lcb_solve_options* opt);
LCB_API lcb_status lcb_solve(const lcb_instance* inst, const lcb_solve_options* opt, lcb_result** out);
/* 0 solved, 2 infeasible, 3 open problem, 4 NP-hard cell. */
LCB_API int lcb_result_exit_code(const lcb_result* res);
/* LCB_ERR_ARGUMENT when the result carries no solution. */
LCB_API lcb_status lcb_result_solution(const lcb_result* res, lcb_solution** out);
LCB_API lcb_status lcb_result_report(const lcb_result* res, char** out);
LCB_API void lcb_result_free(lcb_result* res);

/* Validation report {"feasible", "violations", ...}; *feasible is 0 or 1. */
LCB_API lcb_status lcb_validate(const lcb_instance* inst, const lcb_solution* sol, int* feasible, char** report);

/* Keeps the objective, returns the normalized solution. */
LCB_API lcb_status lcb_normalize(const lcb_instance* inst, const lcb_solution* sol, const char* objective,
                                 lcb_solution** out);

/* Generator spec as JSON: {"speed", "windows", "processing", "n", "seed",
 * "den", "pos_max", "release_max", "deadline_min", "deadline_max", "tau_max",
 * "v"}; only the first three are required. */
LCB_API lcb_status lcb_generate(const char* spec_json, lcb_instance** out);

LCB_API lcb_status lcb_plot_svg(const lcb_instance* inst, const lcb_solution* sol, char** svg);

/* Bench config (JSON list) to CSV. */
LCB_API lcb_status lcb_bench(const char* config_json, char** csv);

/* {"m", "B", "items"} to an instance; v NULL means 1/2. */
LCB_API lcb_status lcb_reduce_3partition(const char* json, const char* v, lcb_instance** out);
LCB_API lcb_status lcb_reduce_embed(const lcb_instance* inst, const char* objective, lcb_instance** out);
/* K bound as "p/q". */
LCB_API lcb_status lcb_k_bound(const lcb_instance* inst, char** out);

/* The complexity landscape as a JSON list of rows. */
LCB_API lcb_status lcb_dispatch_table(char** out);

#ifdef __cplusplus
}
#endif

#endif
