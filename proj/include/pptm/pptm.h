/* Copyright 2026 The pptmoments Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the pptmoments library: moment-based PPT entanglement tests.
 *
 * Conventions:
 *  - Every fallible call returns a pptm_status. On failure, pptm_last_error()
 *    returns a message for the calling thread, valid until the next call.
 *  - Strings returned through `char **` are owned by the caller and released
 *    with pptm_string_free().
 *  - Indices k are 1-based (k = 1 is the first moment); "none" is 0.
 */

#ifndef PPTM_PPTM_H
#define PPTM_PPTM_H

#include <stddef.h>
#include <stdint.h>

#if defined(PPTM_BUILDING_LIBRARY)
#define PPTM_API __attribute__((visibility("default")))
#else
#define PPTM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pptm_status {
    PPTM_OK = 0,
    PPTM_ERR_INVALID_ARGUMENT = 1,
    PPTM_ERR_DIMENSION = 2,
    PPTM_ERR_PARSE = 3,
    PPTM_ERR_SIZE_GUARD = 4,
    PPTM_ERR_NUMERICAL = 5,
    PPTM_ERR_INTERNAL = 6
} pptm_status;

typedef enum pptm_format { PPTM_FORMAT_DEFAULT = 0, PPTM_FORMAT_JSON = 1, PPTM_FORMAT_CSV = 2 } pptm_format;

/* Opaque density matrix with its bipartition. */
typedef struct pptm_state pptm_state;

typedef struct pptm_run_options {
    double tolerance;   /* sign tolerance on f(k); <= 0 selects 1e-9 */
    size_t max_k;       /* 0 = matrix dimension */
    pptm_format format;
    uint64_t seed;
    uint64_t shots;     /* 0 = exact moments, otherwise sampled circuit */
    int oracle;         /* nonzero: also run the eigenvalue oracle */
} pptm_run_options;

typedef struct pptm_shot_estimate {
    size_t k;
    double mean;
    uint64_t shots;
    double std_error;
    uint64_t seed;
} pptm_shot_estimate;

PPTM_API const char *pptm_version(void);
PPTM_API const char *pptm_last_error(void);
PPTM_API const char *pptm_status_string(pptm_status status);
PPTM_API void pptm_string_free(char *s);
PPTM_API void pptm_run_options_init(pptm_run_options *options);

/* ---- states ---------------------------------------------------------- */

/* bell | ghz:n=3,split=1 | werner:p=0.75 | butterfly:t=1.2 |
 * random:da=2,db=2,seed=7 | product:da=2,db=2,seed=1 | file:<path> */
PPTM_API pptm_status pptm_state_from_spec(const char *spec, pptm_state **out);
/* {"rows","cols","re","im","dim_a","dim_b"} */
PPTM_API pptm_status pptm_state_from_json(const char *json, pptm_state **out);
/* Row-major real/imaginary parts, d = dim_a * dim_b. */
PPTM_API pptm_status pptm_state_from_arrays(size_t dim_a, size_t dim_b, const double *re, const double *im,
                                            pptm_state **out);
PPTM_API void pptm_state_free(pptm_state *state);
PPTM_API pptm_status pptm_state_dims(const pptm_state *state, size_t *dim_a, size_t *dim_b);
PPTM_API pptm_status pptm_state_to_json(const pptm_state *state, char **out_json);

/* ---- moment tests ---------------------------------------------------- */

/* p_1..p_m of the partial transpose into out[0..m). */
PPTM_API pptm_status pptm_moments(const pptm_state *state, size_t m, double *out);
/* f(1)..f(m) into out[0..m); *first_violation = least k with f(k) < -tol, or 0. */
PPTM_API pptm_status pptm_f_sequence(const pptm_state *state, size_t m, double tol, double *out,
                                     size_t *first_violation);
/* *npt = 1 when min eigenvalue of the partial transpose < -tol. */
PPTM_API pptm_status pptm_oracle_ppt(const pptm_state *state, double tol, int *npt, double *min_eigenvalue);
/* Full report as JSON; *entangled = 1 for an ENTANGLED verdict. */
PPTM_API pptm_status pptm_report_json(const pptm_state *state, double tol, int run_oracle, char **out_json,
                                      int *entangled);

/* ---- circuit --------------------------------------------------------- */

PPTM_API pptm_status pptm_perm_moment_trace(const pptm_state *state, size_t k, double *out);
PPTM_API pptm_status pptm_hadamard_expectation(const pptm_state *state, size_t k, double *out);
PPTM_API pptm_status pptm_sample_hadamard_test(const pptm_state *state, size_t k, uint64_t shots, uint64_t seed,
                                               pptm_shot_estimate *out);

/* ---- graph zeta ------------------------------------------------------ */

/* c_0..c_kmax into out[0..kmax] from the prime-class Euler product of the
 * partial transpose's graph. */
PPTM_API pptm_status pptm_zeta_coeffs_primes(const pptm_state *state, size_t k_max, double *out);
/* Same coefficients from the moment series exponential. */
PPTM_API pptm_status pptm_zeta_coeffs_moments(const pptm_state *state, size_t k_max, double *out);

/* ---- symmetric polynomials ------------------------------------------ */

PPTM_API pptm_status pptm_newton_elementary(const double *moments, size_t n, double *out_e);
PPTM_API pptm_status pptm_elementary_closed_form(const double *moments, size_t count, size_t k, double *out);
PPTM_API pptm_status pptm_descartes_bound(const double *coefficients, size_t count, size_t *out);

/* ---- commands (CLI surface) ------------------------------------------ */
/* Each renders the command output into *out and sets *exit_code to the
 * process status the CLI should return (0 consistent, 1 entangled,
 * 2 error, 3 inconclusive in shots mode). */

PPTM_API pptm_status pptm_cmd_test(const char *spec, const pptm_run_options *options, char **out, int *exit_code);
PPTM_API pptm_status pptm_cmd_fseries(const char *spec, const pptm_run_options *options, char **out, int *exit_code);
PPTM_API pptm_status pptm_cmd_zeta(const char *spec, const pptm_run_options *options, char **out, int *exit_code);
PPTM_API pptm_status pptm_cmd_moments(const char *spec, const pptm_run_options *options, char **out, int *exit_code);
/* range is "lo:hi:step" */
PPTM_API pptm_status pptm_cmd_scan(const char *spec, const char *parameter, const char *range,
                                   const pptm_run_options *options, char **out, int *exit_code);
PPTM_API pptm_status pptm_cmd_selftest(const pptm_run_options *options, char **out, int *exit_code);
PPTM_API pptm_status pptm_cmd_export(const char *spec, char **out, int *exit_code);

#ifdef __cplusplus
}
#endif

#endif /* PPTM_PPTM_H */
