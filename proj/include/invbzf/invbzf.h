// Copyright 2026 The invbzf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the inverse Banzhaf solver.
 *
 * Every call returns an invbzf_status; on failure invbzf_last_error() holds a
 * message for the calling thread. Strings handed out through char** are owned
 * by the caller and released with invbzf_string_free. */

#ifndef INVBZF_INVBZF_H_
#define INVBZF_INVBZF_H_

#include <stdint.h>

#if defined(_WIN32)
#if defined(INVBZF_BUILDING)
#define INVBZF_API __declspec(dllexport)
#else
#define INVBZF_API __declspec(dllimport)
#endif
#else
#define INVBZF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  INVBZF_OK = 0,
  INVBZF_INVALID = 1,   /* malformed input or unsupported option */
  INVBZF_BUDGET = 2,    /* node budget exhausted; the output is still filled */
  INVBZF_RESOURCE = 3,  /* instance beyond the enumeration or grid limits */
  INVBZF_IO = 4,
  INVBZF_MISMATCH = 5,  /* reproduce: some cell outside tolerance; output filled */
  INVBZF_INTERNAL = 6
} invbzf_status;

typedef struct invbzf_target invbzf_target;

INVBZF_API const char* invbzf_version(void);
INVBZF_API const char* invbzf_last_error(void);
INVBZF_API const char* invbzf_status_name(invbzf_status s);
INVBZF_API void invbzf_string_free(char* s);

/* Accepts {"beta":[...]}, a bare JSON array, or a comma/space separated list;
 * entries are decimals or fractions and must sum to exactly 1. */
INVBZF_API invbzf_status invbzf_target_parse(const char* text, invbzf_target** out);
/* Square-root rule target from a name,population CSV. The population is kept
 * for the d1w metric. */
INVBZF_API invbzf_status invbzf_target_from_population(const char* csv_path, invbzf_target** out);
INVBZF_API void invbzf_target_free(invbzf_target* t);
INVBZF_API int invbzf_target_size(const invbzf_target* t);
INVBZF_API invbzf_status invbzf_target_json(const invbzf_target* t, char** json);

typedef struct {
  const char* game_class; /* "S", "C", "W" */
  const char* metric;     /* "d1", "dinf", "d1w" */
  const char* method;     /* "enum", "bisect", "hill" */
  uint64_t budget;        /* bisect: nodes per feasibility call; hill: steps per restart; 0 = default */
  uint64_t seed;          /* hill */
  int restarts;           /* hill; 0 = default */
} invbzf_solve_options;

INVBZF_API void invbzf_solve_options_init(invbzf_solve_options* o);
/* Result as SolveResult JSON. INVBZF_BUDGET means status "Bracketed". */
INVBZF_API invbzf_status invbzf_solve(const invbzf_target* t, const invbzf_solve_options* o, char** json);

/* One CSV row per quota rule: rule,quota,integer_quota,weights,d1,dinf[,d1w],ambiguous */
INVBZF_API invbzf_status invbzf_heuristics(const invbzf_target* t, char** csv);

typedef struct {
  int n;
  const char* rule;       /* "half", "qstar", "qbar", "optimal" */
  const char* metric;     /* "d1", "dinf" */
  const char* game_class; /* rule "optimal" only; default "W" */
  uint64_t sample;        /* 0: full grid */
  uint64_t seed;
  int threads;            /* 0: INVBZF_THREADS or hardware */
  int allow_large;        /* lift the full-grid (n <= 7) and optimal (n <= 5) limits */
} invbzf_grid_options;

INVBZF_API void invbzf_grid_options_init(invbzf_grid_options* o);
/* CSV with header n,rule,metric,median,average,q10,q05,q01 and one row. */
INVBZF_API invbzf_status invbzf_grid_stats(const invbzf_grid_options* o, char** csv);
INVBZF_API invbzf_status invbzf_grid_size(int n, int denominator, uint64_t* size);

INVBZF_API invbzf_status invbzf_enumerate_count(int n, const char* game_class, uint64_t* count);

/* Rows k,epsilon,l1,l2,bound. epsilon NULL or "" runs the default sweep with
 * `steps` values. */
INVBZF_API invbzf_status invbzf_bounds(const invbzf_target* t, int k, const char* epsilon, int steps, char** csv);

/* Family (2,...,2,1) table for n_from..n_to; exact columns come from
 * enumeration where n is within exact_max_n and the class limits. */
INVBZF_API invbzf_status invbzf_analytic_table(const char* metric, int n_from, int n_to, int exact_max_n,
                                               char** csv);

/* swings and PBI of a game given as JSON (weights/quota or minimal_winning). */
INVBZF_API invbzf_status invbzf_game_power(const char* game_json, char** json);

INVBZF_API invbzf_status invbzf_export_lp(const invbzf_target* t, const char* game_class, const char* metric,
                                          const char* alpha, int strict, char** lp);

typedef struct {
  int max_stats_n;
  int max_count_n;
  const char* data_dir; /* NULL or "": table 2 is skipped */
  int threads;
} invbzf_reproduce_options;

INVBZF_API void invbzf_reproduce_options_init(invbzf_reproduce_options* o);
/* CSV table,n,column,expected,actual,tolerance,status,note. INVBZF_MISMATCH
 * if a computed cell misses its tolerance. */
INVBZF_API invbzf_status invbzf_reproduce(const char* table, const invbzf_reproduce_options* o, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* INVBZF_INVBZF_H_ */
