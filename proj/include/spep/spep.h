/*
 * Copyright 2026 The spep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the spep single-photon entanglement purification toolkit.
 *
 * Every function returns an spep_status. On failure the thread-local
 * message from spep_last_error() describes the problem. Objects returned
 * through pointer-to-pointer arguments are owned by the caller and released
 * with the matching *_free function.
 */
#ifndef SPEP_SPEP_H
#define SPEP_SPEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPEP_API __declspec(dllexport)
#else
#define SPEP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spep_status {
  SPEP_OK = 0,
  SPEP_ERR_INDEX = 1,      /* mode index out of range or overlapping */
  SPEP_ERR_DOMAIN = 2,     /* parameter outside its admissible range */
  SPEP_ERR_DEGENERATE = 3, /* zero-probability configuration */
  SPEP_ERR_INVALID = 4,    /* null pointer or malformed argument */
  SPEP_ERR_INTERNAL = 5
} spep_status;

SPEP_API const char* spep_version(void);
SPEP_API const char* spep_last_error(void);

/* ---- closed forms ------------------------------------------------------ */

typedef struct spep_bs_params {
  double theta;
  double phi;
  double xi;
} spep_bs_params;

typedef struct spep_protocol_spec {
  double input_fidelity;
  spep_bs_params alice;
  spep_bs_params bob;
} spep_protocol_spec;

typedef enum spep_branch { SPEP_BRANCH_DA = 0, SPEP_BRANCH_DB = 1, SPEP_BRANCH_COMBINED = 2 } spep_branch;

typedef struct spep_coefficients {
  double a;
  double b_plus_re, b_plus_im;
  double b_minus_re, b_minus_im;
} spep_coefficients;

SPEP_API spep_status spep_f_opt(double input_fidelity, double* out);
SPEP_API spep_status spep_p_opt(double input_fidelity, double* out);
SPEP_API spep_status spep_f_1(double input_fidelity, double* out);
SPEP_API spep_status spep_p_1(double input_fidelity, double* out);
SPEP_API spep_status spep_theta_opt(double input_fidelity, double* out);
SPEP_API spep_status spep_simplified_fidelity(double input_fidelity, double theta, double* out);

SPEP_API spep_status spep_coefficients_of(const spep_protocol_spec* spec, spep_branch branch,
                                          spep_coefficients* out);
SPEP_API spep_status spep_trace_closed_form(const spep_protocol_spec* spec, spep_branch branch, double* out);
/* Raw fidelity with psi+ (no heralded correction); per branch only. */
SPEP_API spep_status spep_fidelity_closed_form(const spep_protocol_spec* spec, spep_branch branch, double* out);

/* ---- simulation -------------------------------------------------------- */

typedef struct spep_detector {
  double efficiency;
  int resolving; /* nonzero: photon-number resolving; zero: threshold */
} spep_detector;

typedef struct spep_outcome {
  double output_fidelity; /* after the heralded phase correction */
  double raw_fidelity;
  double success_probability;
  int phase_corrected;
} spep_outcome;

typedef struct spep_imperfect_outcome {
  double single_photon_fidelity;
  double vacuum_weight;
  double success_probability;
} spep_imperfect_outcome;

/* `detector` may be NULL for ideal detectors. Any of the outputs may be NULL. */
SPEP_API spep_status spep_run_simulated(const spep_protocol_spec* spec, const spep_detector* detector,
                                        spep_outcome* detect_da, spep_outcome* detect_db,
                                        spep_outcome* combined);
SPEP_API spep_status spep_run_with_visibility(double input_fidelity, double theta, double visibility,
                                              spep_outcome* combined);
SPEP_API spep_status spep_run_with_efficiency(double input_fidelity, double theta,
                                              const spep_detector* detector, spep_imperfect_outcome* out);

/* ---- optimality search ------------------------------------------------- */

typedef struct spep_search_config {
  int restarts;
  int max_iterations;
  double tolerance;
  uint64_t seed;
  int ancilla_per_side; /* 0, 1 or 2 */
  int workers;          /* 0 = hardware concurrency */
} spep_search_config;

typedef struct spep_search_result spep_search_result;

SPEP_API void spep_search_config_default(spep_search_config* config);
SPEP_API spep_status spep_search(double input_fidelity, const spep_search_config* config,
                                 spep_search_result** out);
SPEP_API double spep_search_result_best_fidelity(const spep_search_result* result);
SPEP_API long long spep_search_result_evaluations(const spep_search_result* result);
SPEP_API int spep_search_result_converged(const spep_search_result* result);
/* Number of mesh angles per party (M^2 with M = 2 + ancilla_per_side). */
SPEP_API size_t spep_search_result_param_count(const spep_search_result* result);
/* Copies Alice's (party 0) or Bob's (party 1) angles; `capacity` entries max. */
SPEP_API spep_status spep_search_result_params(const spep_search_result* result, int party, double* out,
                                               size_t capacity);
SPEP_API void spep_search_result_free(spep_search_result* result);

/* ---- datasets ---------------------------------------------------------- */

typedef struct spep_grid {
  double f_min;
  double f_max;
  int points;
} spep_grid;

typedef struct spep_buffer spep_buffer;

SPEP_API const char* spep_buffer_data(const spep_buffer* buffer);
SPEP_API size_t spep_buffer_size(const spep_buffer* buffer);
SPEP_API void spep_buffer_free(spep_buffer* buffer);

SPEP_API spep_status spep_curves_csv(const spep_grid* grid, spep_buffer** out);
SPEP_API spep_status spep_visibility_csv(const spep_grid* grid, const double* visibilities, size_t count,
                                         int workers, spep_buffer** out);
SPEP_API spep_status spep_optimize_csv(const double* fidelities, size_t fidelity_count, const int* ancillas,
                                       size_t ancilla_count, const spep_search_config* config,
                                       spep_buffer** out);

/* ---- verification ------------------------------------------------------ */

typedef struct spep_verify_options {
  const double* efficiencies; /* NULL: 0.3, 0.6, 0.95 */
  size_t efficiency_count;
  int configurations;         /* <= 0: 200 */
  uint64_t seed;
  int inject_b_minus_flip;    /* fault injection for testing the checker */
} spep_verify_options;

typedef struct spep_verify_report spep_verify_report;

SPEP_API void spep_verify_options_default(spep_verify_options* options);
SPEP_API spep_status spep_verify(const spep_verify_options* options, spep_verify_report** out);
SPEP_API int spep_verify_report_passed(const spep_verify_report* report);
SPEP_API size_t spep_verify_report_check_count(const spep_verify_report* report);
SPEP_API spep_status spep_verify_report_check(const spep_verify_report* report, size_t index, const char** name,
                                              double* max_deviation, double* tolerance, int* passed);
SPEP_API const char* spep_verify_report_text(const spep_verify_report* report);
SPEP_API void spep_verify_report_free(spep_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SPEP_SPEP_H */
