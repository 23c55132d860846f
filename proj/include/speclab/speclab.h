/* Copyright 2026 The speclab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libspeclab.
 *
 * Every fallible call returns a speclab_status; on failure the message is
 * available from speclab_last_error() on the same thread until the next
 * call. Handles are opaque and owned by the caller, who releases them with
 * the matching *_free function. Strings returned through char** outputs are
 * released with speclab_string_free.
 */

#ifndef SPECLAB_SPECLAB_H
#define SPECLAB_SPECLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPECLAB_BUILDING_LIBRARY)
#define SPECLAB_API __attribute__((visibility("default")))
#else
#define SPECLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum speclab_status {
  SPECLAB_OK = 0,
  SPECLAB_ERR_CONTRACT = 1,
  SPECLAB_ERR_DEGENERATE_INPUT = 2,
  SPECLAB_ERR_NUMERICAL = 3,
  SPECLAB_ERR_NO_CONVERGENCE = 4,
  SPECLAB_ERR_SIZE_GUARD = 5,
  SPECLAB_ERR_PARSE = 6,
  SPECLAB_ERR_SCHEMA = 7,
  SPECLAB_ERR_IO = 8,
  SPECLAB_ERR_USAGE = 9,
  SPECLAB_ERR_INTERNAL = 10
} speclab_status;

/* Ensemble tags; values match the CLI names in order. */
typedef enum speclab_ensemble {
  SPECLAB_ORTHOGONAL = 0,
  SPECLAB_SO = 1,
  SPECLAB_SO_MINUS = 2,
  SPECLAB_UNITARY = 3,
  SPECLAB_SU = 4,
  SPECLAB_SYMPLECTIC = 5,
  SPECLAB_COE = 6,
  SPECLAB_CSE = 7,
  SPECLAB_GUE = 8,
  SPECLAB_COMPRESSION = 9,
  SPECLAB_RANDOMIZED_SUM = 10
} speclab_ensemble;

typedef enum speclab_domain {
  SPECLAB_DOMAIN_CIRCLE = 0,
  SPECLAB_DOMAIN_LINE = 1
} speclab_domain;

typedef enum speclab_metric {
  SPECLAB_METRIC_LINE_EUCLIDEAN = 0,
  SPECLAB_METRIC_CIRCLE_GEODESIC = 1,
  SPECLAB_METRIC_CIRCLE_CHORDAL = 2
} speclab_metric;

typedef enum speclab_algorithm {
  SPECLAB_ALGO_SORTED_PAIRING = 0,
  SPECLAB_ALGO_CIRCLE_CDF = 1,
  SPECLAB_ALGO_CDF_INTEGRAL = 2,
  SPECLAB_ALGO_ASSIGNMENT_ORACLE = 3
} speclab_algorithm;

typedef enum speclab_reference {
  SPECLAB_REF_MEASURE = 0,
  SPECLAB_REF_UNIFORM_CIRCLE = 1,
  SPECLAB_REF_SEMICIRCLE = 2
} speclab_reference;

typedef struct speclab_stream_key {
  uint64_t master_seed;
  int ensemble;
  uint64_t n;
  uint64_t replicate;
  uint32_t substream;
} speclab_stream_key;

typedef struct speclab_distance {
  double value;
  double p;
  int metric;    /* speclab_metric */
  int algorithm; /* speclab_algorithm */
  int has_chordal_bounds;
  double chordal_lower;
  double chordal_upper;
} speclab_distance;

typedef struct speclab_matrix speclab_matrix;
typedef struct speclab_measure speclab_measure;
typedef struct speclab_experiment speclab_experiment;

/* ---- library ---------------------------------------------------------- */

SPECLAB_API const char* speclab_version(void);
SPECLAB_API const char* speclab_last_error(void);
SPECLAB_API const char* speclab_status_name(speclab_status status);
SPECLAB_API void speclab_string_free(char* s);

/* ---- ensembles -------------------------------------------------------- */

SPECLAB_API speclab_status speclab_ensemble_from_name(const char* name,
                                                      int* tag_out);
/* NULL for an unknown tag. */
SPECLAB_API const char* speclab_ensemble_name(int tag);
SPECLAB_API int speclab_ensemble_is_circle(int tag);
/* 2n for symplectic and cse, else n; 0 for an unknown tag. */
SPECLAB_API uint64_t speclab_ambient_dim(int tag, uint64_t n);

/* The sampled matrix: unitary for circle ensembles, Hermitian otherwise.
 * k is the compression size and is ignored by other ensembles. */
SPECLAB_API speclab_status speclab_sample_matrix(int tag, uint64_t n,
                                                 uint64_t k,
                                                 const speclab_stream_key* key,
                                                 speclab_matrix** out);
SPECLAB_API size_t speclab_matrix_dim(const speclab_matrix* m);
/* Interleaved (re, im) pairs, row-major; `out` holds 2 * dim * dim doubles. */
SPECLAB_API speclab_status speclab_matrix_copy(const speclab_matrix* m,
                                               double* out);
SPECLAB_API void speclab_matrix_free(speclab_matrix* m);

/* ---- measures --------------------------------------------------------- */

SPECLAB_API speclab_status speclab_sample_spectrum(
    int tag, uint64_t n, uint64_t k, const speclab_stream_key* key,
    speclab_measure** out);
/* Eigenangles of a unitary or eigenvalues of a Hermitian matrix. */
SPECLAB_API speclab_status speclab_matrix_spectrum(const speclab_matrix* m,
                                                   speclab_measure** out);
SPECLAB_API speclab_status speclab_measure_from_atoms(int domain,
                                                      const double* atoms,
                                                      size_t count,
                                                      speclab_measure** out);
SPECLAB_API int speclab_measure_domain(const speclab_measure* m);
SPECLAB_API size_t speclab_measure_size(const speclab_measure* m);
/* Sorted atoms; `out` holds speclab_measure_size(m) doubles. */
SPECLAB_API speclab_status speclab_measure_atoms(const speclab_measure* m,
                                                 double* out);
SPECLAB_API void speclab_measure_free(speclab_measure* m);

/* ---- transport -------------------------------------------------------- */

SPECLAB_API const char* speclab_metric_name(int metric);
SPECLAB_API const char* speclab_algorithm_name(int algorithm);

/* d_1 to a reference. With SPECLAB_REF_MEASURE `ref` must be non-NULL. */
SPECLAB_API speclab_status speclab_distance_to_reference(
    const speclab_measure* m, int reference, const speclab_measure* ref,
    speclab_distance* out);
/* d_p between two measures. Line: p in [1, 2] (any counts when p == 1).
 * Circle geodesic: p == 1. Circle chordal: exact through the assignment
 * solver, equal counts up to 12 atoms. */
SPECLAB_API speclab_status speclab_distance_pair(const speclab_measure* a,
                                                 const speclab_measure* b,
                                                 int metric, double p,
                                                 speclab_distance* out);
SPECLAB_API speclab_status speclab_assignment_oracle(const speclab_measure* a,
                                                     const speclab_measure* b,
                                                     int metric, double p,
                                                     speclab_distance* out);
SPECLAB_API speclab_status speclab_distance_json(const speclab_distance* d,
                                                 char** json_out);

/* ---- spectra files ---------------------------------------------------- */

/* CSV with one spectrum per line for replicates 0..count-1 at `seed`.
 * Compression uses k = ceil(n/2). */
SPECLAB_API speclab_status speclab_sample_spectra_csv(int tag, uint64_t n,
                                                      uint64_t count,
                                                      uint64_t seed,
                                                      char** csv_out);
SPECLAB_API speclab_status speclab_spectra_csv_count(const char* csv,
                                                     size_t* rows_out);
/* The spectrum on data row `row` (0-based). */
SPECLAB_API speclab_status speclab_spectra_csv_row(const char* csv, size_t row,
                                                   speclab_measure** out);

/* ---- experiments ------------------------------------------------------ */

SPECLAB_API speclab_status speclab_plan_validate(const char* plan_json);
/* seed_override may be NULL; workers == 0 means 1. */
SPECLAB_API speclab_status speclab_experiment_run(const char* plan_json,
                                                  unsigned workers,
                                                  const uint64_t* seed_override,
                                                  speclab_experiment** out);
SPECLAB_API uint64_t
speclab_experiment_record_count(const speclab_experiment* e);
SPECLAB_API uint64_t speclab_experiment_seed(const speclab_experiment* e);
SPECLAB_API speclab_status
speclab_experiment_plan_json(const speclab_experiment* e, char** out);
SPECLAB_API speclab_status
speclab_experiment_records_csv(const speclab_experiment* e, char** out);
SPECLAB_API speclab_status
speclab_experiment_summary_json(const speclab_experiment* e, char** out);
SPECLAB_API speclab_status
speclab_experiment_verdict(const speclab_experiment* e, char** out);
SPECLAB_API void speclab_experiment_free(speclab_experiment* e);

/* Re-aggregates persisted records into summary JSON. */
SPECLAB_API speclab_status speclab_summarize_records(const char* plan_json,
                                                     const char* records_csv,
                                                     char** summary_out);

/* Two-sample KS between d_1 laws of two circle ensembles at level 0.01. */
SPECLAB_API speclab_status speclab_identdist(int tag_a, uint64_t n_a,
                                             int tag_b, uint64_t n_b,
                                             uint64_t replicates,
                                             uint64_t seed, unsigned workers,
                                             double* ks_out, double* p_out,
                                             int* accept_out);

/* suite: lipschitz, transport-oracle, group-membership or all. details_out
 * (may be NULL) receives one line per violation. */
SPECLAB_API speclab_status speclab_verify(const char* suite, uint64_t trials,
                                          uint64_t seed,
                                          uint64_t* checks_out,
                                          uint64_t* violations_out,
                                          char** details_out);

/* ---- manifests -------------------------------------------------------- */

typedef struct speclab_manifest {
  uint64_t master_seed;
  const char* plan_json; /* canonical plan or command echo; may be NULL */
  const char* started_utc;
  const char* finished_utc;
  uint64_t record_count;
  const char* records_file;
  const char* records_sha256;
} speclab_manifest;

SPECLAB_API speclab_status speclab_manifest_to_json(const speclab_manifest* m,
                                                    char** json_out);
SPECLAB_API speclab_status speclab_manifest_parse(const char* json,
                                                  char** records_file_out,
                                                  char** records_sha256_out,
                                                  uint64_t* record_count_out);
SPECLAB_API speclab_status speclab_utc_now(char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECLAB_SPECLAB_H */
