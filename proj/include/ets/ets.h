/* Copyright 2026 The ETS Simulator Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the entangled-thermal-state simulator.
 *
 * Every call returns an ets_status; on failure ets_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller, who releases them with the matching
 * *_destroy function (NULL is accepted there). */

#ifndef ETS_ETS_H_
#define ETS_ETS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ETS_BUILDING_LIBRARY)
#define ETS_API __attribute__((visibility("default")))
#else
#define ETS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ets_status {
  ETS_OK = 0,
  ETS_ERR_INVALID_ARGUMENT = 1,
  ETS_ERR_AMPLITUDE_OUT_OF_RANGE = 2,
  ETS_ERR_OVERFLOW = 3,
  ETS_ERR_NON_CONVERGENCE = 4,
  ETS_ERR_UNSUPPORTED = 5,
  ETS_ERR_INCONSISTENT_STATE = 6,
  ETS_ERR_IO = 7,
  ETS_ERR_INTERNAL = 8
} ets_status;

typedef struct ets_plan ets_plan;
typedef struct ets_result ets_result;
typedef struct ets_report ets_report;

typedef struct ets_row {
  double V;
  double d;
  double eta;
  double value; /* NaN when failed */
  double err;
  double lr_bound;
  double quantum_max;
  int violated;
  int failed;
} ets_row;

ETS_API const char* ets_version(void);
ETS_API const char* ets_status_string(ets_status status);
ETS_API const char* ets_last_error(void);

/* w(z) = exp(-z^2) erfc(-iz). */
ETS_API ets_status ets_faddeeva(double re, double im, double* out_re, double* out_im);

/* Plans. Families: ghz3-bs, ghz3-cond, w3, ghz4-cond, cluster4-cond,
 * cluster4-kerr, ghz3-kerr. Functionals: mermin3, svetlichny3, svetlichny4,
 * sasa, wwzb4. A new plan has V = 1, d = 0, eta = 1 and canonical angles. */
ETS_API ets_status ets_plan_create(const char* family, const char* inequality, ets_plan** out);
ETS_API void ets_plan_destroy(ets_plan* plan);
ETS_API ets_status ets_plan_set_grids(ets_plan* plan, const double* V, size_t nV, const double* d, size_t nd,
                                      const double* eta, size_t neta);
/* Each grid is "a:b:n" (n points, ends inclusive) or a comma list. */
ETS_API ets_status ets_plan_set_grid_text(ets_plan* plan, const char* V, const char* d, const char* eta);
/* "canonical" or "optimize". */
ETS_API ets_status ets_plan_set_angle_mode(ets_plan* plan, const char* mode);
/* Flat (theta, phase) pairs, party by party, settings in order. */
ETS_API ets_status ets_plan_set_explicit_angles(ets_plan* plan, const double* pairs, size_t count);
ETS_API ets_status ets_plan_set_restarts(ets_plan* plan, int restarts);
ETS_API ets_status ets_plan_set_closed_form(ets_plan* plan, int enabled);
/* method: "auto", "gh" or "mc". */
ETS_API ets_status ets_plan_set_quadrature(ets_plan* plan, int nodes, int64_t mc_samples, uint64_t seed,
                                           const char* method, double rel_tol);
/* "prepared" or "outcomes". */
ETS_API ets_status ets_plan_set_normalization(ets_plan* plan, const char* mode);
ETS_API ets_status ets_plan_validate(const ets_plan* plan);

/* Sweeps and figures. A failing grid point does not fail the call; check
 * ets_result_any_failed. */
ETS_API ets_status ets_run_sweep(const ets_plan* plan, ets_result** out);
ETS_API size_t ets_figure_count(void);
ETS_API const char* ets_figure_name(size_t index);
/* Quadrature settings are taken from `settings` when it is not NULL. */
ETS_API ets_status ets_run_figure(const char* name, const ets_plan* settings, ets_result** out);

ETS_API size_t ets_result_row_count(const ets_result* result);
ETS_API ets_status ets_result_row(const ets_result* result, size_t index, ets_row* out);
/* Writes up to `capacity` (theta, phase) pairs; `count` receives the total. */
ETS_API ets_status ets_result_row_angles(const ets_result* result, size_t index, double* pairs, size_t capacity,
                                         size_t* count);
ETS_API const char* ets_result_row_error(const ets_result* result, size_t index);
ETS_API int ets_result_any_failed(const ets_result* result);
/* format: "csv" or "json". path NULL or "-" writes to stdout. */
ETS_API ets_status ets_result_write(const ets_result* result, const char* path, const char* format);
ETS_API void ets_result_destroy(ets_result* result);

/* Acceptance checks. The callback, when given, sees each check as it
 * finishes. mutate flips one sign per functional before the bound check. */
typedef void (*ets_check_callback)(int id, const char* name, int passed, const char* detail, void* user);
ETS_API ets_status ets_validate(int mutate, const ets_plan* settings, ets_check_callback callback, void* user,
                                ets_report** out);
ETS_API size_t ets_report_count(const ets_report* report);
ETS_API ets_status ets_report_check(const ets_report* report, size_t index, int* id, const char** name, int* passed,
                                    const char** detail);
ETS_API int ets_report_all_passed(const ets_report* report);
ETS_API void ets_report_destroy(ets_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ETS_ETS_H_ */
