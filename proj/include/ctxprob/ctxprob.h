// Copyright 2026 The ctxprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ctxprob library.
 *
 * Objects are opaque handles created by *_new / *_load / *_parse / model
 * constructors and released by the matching *_free. Every fallible call
 * returns a ctxprob_status; the status value doubles as the CLI exit code.
 * Details of the most recent failure on the calling thread are available via
 * ctxprob_last_error_message() and ctxprob_last_error_kind().
 *
 * Outcome indices in this interface are 1-based (a1, a2, b1, b2); matrices
 * are row-major with rows indexed by the B-outcome.
 */
#ifndef CTXPROB_CTXPROB_H
#define CTXPROB_CTXPROB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CTXPROB_BUILDING)
#    define CTXPROB_API __declspec(dllexport)
#  else
#    define CTXPROB_API __declspec(dllimport)
#  endif
#else
#  define CTXPROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctxprob_status {
    CTXPROB_OK = 0,
    CTXPROB_INVALID_INPUT = 1,
    CTXPROB_DEGENERATE = 2,
    CTXPROB_INFEASIBLE = 3
} ctxprob_status;

typedef enum ctxprob_error_kind {
    CTXPROB_ERR_NONE = 0,
    CTXPROB_ERR_INVALID_INPUT,
    CTXPROB_ERR_INCONSISTENT,
    CTXPROB_ERR_OUT_OF_RANGE,
    CTXPROB_ERR_DEGENERATE_CONTEXT,
    CTXPROB_ERR_ZERO_FILTRATION,
    CTXPROB_ERR_EMPTY_ENSEMBLE,
    CTXPROB_ERR_INFEASIBLE_LAMBDA,
    CTXPROB_ERR_NON_TRIGONOMETRIC,
    CTXPROB_ERR_NOT_BALANCED,
    CTXPROB_ERR_GENERATION_EXHAUSTED
} ctxprob_error_kind;

typedef enum ctxprob_verdict {
    CTXPROB_CLASSICAL = 0,
    CTXPROB_TRIGONOMETRIC,
    CTXPROB_HYPERBOLIC,
    CTXPROB_HYPER_TRIGONOMETRIC,
    CTXPROB_BOUNDARY
} ctxprob_verdict;

typedef enum ctxprob_model_kind {
    CTXPROB_MODEL_CLASSICAL = 0,
    CTXPROB_MODEL_QUBIT,
    CTXPROB_MODEL_SYNTHETIC_TRIGONOMETRIC,
    CTXPROB_MODEL_SYNTHETIC_HYPERBOLIC
} ctxprob_model_kind;

typedef struct ctxprob_statistics {
    double prior[2];
    double transition[2][2];
    double outcome[2];
} ctxprob_statistics;

typedef struct ctxprob_sample_sizes {
    uint64_t context;
    uint64_t filtration;
    uint64_t filtered[2];
} ctxprob_sample_sizes;

typedef struct ctxprob_options ctxprob_options;
typedef struct ctxprob_experiment ctxprob_experiment;
typedef struct ctxprob_model ctxprob_model;
typedef struct ctxprob_sweep ctxprob_sweep;
typedef struct ctxprob_text ctxprob_text;

CTXPROB_API const char *ctxprob_version(void);
CTXPROB_API const char *ctxprob_last_error_message(void);
CTXPROB_API ctxprob_error_kind ctxprob_last_error_kind(void);

/* Owned text (JSON or CSV) returned by the library. */
CTXPROB_API const char *ctxprob_text_data(const ctxprob_text *text);
CTXPROB_API size_t ctxprob_text_size(const ctxprob_text *text);
CTXPROB_API void ctxprob_text_free(ctxprob_text *text);

/* Calculus on plain values. */
CTXPROB_API ctxprob_status ctxprob_predict_outcome(const double prior[2], const double transition[2][2],
                                                   const double lambda[2], double outcome_out[2]);
CTXPROB_API ctxprob_status ctxprob_lambda_from_statistics(const ctxprob_statistics *stats, double lambda_out[2]);
CTXPROB_API ctxprob_status ctxprob_classify(const double lambda[2], double eps_class, ctxprob_verdict *verdict_out);
CTXPROB_API ctxprob_status ctxprob_double_stochastic(const double transition[2][2], double tolerance,
                                                     int *is_double_stochastic_out);

/* Options shared by analyze, reconstruct, balance, simulate and sweep. */
CTXPROB_API ctxprob_status ctxprob_options_new(ctxprob_options **out);
CTXPROB_API void ctxprob_options_free(ctxprob_options *options);
CTXPROB_API ctxprob_status ctxprob_options_set_tolerance(ctxprob_options *options, double tolerance);
CTXPROB_API ctxprob_status ctxprob_options_set_eps_class(ctxprob_options *options, double eps_class);
CTXPROB_API ctxprob_status ctxprob_options_set_bootstrap_replicates(ctxprob_options *options, uint64_t replicates);
CTXPROB_API ctxprob_status ctxprob_options_set_seed(ctxprob_options *options, uint64_t seed);
CTXPROB_API ctxprob_status ctxprob_options_set_workers(ctxprob_options *options, unsigned workers);
/* Nonzero: a vanishing numerator over a vanishing denominator is an error
 * instead of resolving to lambda = 0. */
CTXPROB_API ctxprob_status ctxprob_options_set_strict_degeneracy(ctxprob_options *options, int strict);

/* Experiment files. */
CTXPROB_API ctxprob_status ctxprob_experiment_parse(const char *json, ctxprob_experiment **out);
CTXPROB_API ctxprob_status ctxprob_experiment_load(const char *path, ctxprob_experiment **out);
CTXPROB_API ctxprob_status ctxprob_experiment_from_statistics(const ctxprob_statistics *stats,
                                                              ctxprob_experiment **out);
CTXPROB_API ctxprob_status ctxprob_experiment_to_json(const ctxprob_experiment *experiment, ctxprob_text **out);
CTXPROB_API ctxprob_status ctxprob_experiment_statistics(const ctxprob_experiment *experiment,
                                                         ctxprob_statistics *out);
CTXPROB_API void ctxprob_experiment_free(ctxprob_experiment *experiment);

/* Oracle models. Classical outcome indices are 1 or 2. */
CTXPROB_API ctxprob_status ctxprob_model_qubit(double alpha, double phi, double b_rotation, double b_phase,
                                               ctxprob_model **out);
CTXPROB_API ctxprob_status ctxprob_model_classical(const double *weights, const int *a_values, const int *b_values,
                                                   size_t n_points, ctxprob_model **out);
CTXPROB_API ctxprob_status ctxprob_model_synthetic(const double prior[2], const double transition[2][2],
                                                   const double target_lambda[2], ctxprob_model **out);
CTXPROB_API ctxprob_status ctxprob_model_preset(const char *name, ctxprob_model **out);
CTXPROB_API ctxprob_status ctxprob_model_random(ctxprob_model_kind kind, uint64_t seed, ctxprob_model **out);
CTXPROB_API ctxprob_status ctxprob_model_statistics(const ctxprob_model *model, ctxprob_statistics *out);
CTXPROB_API void ctxprob_model_free(ctxprob_model *model);

/* Monte-Carlo simulation of the three experiments; the result embeds the
 * model descriptor. `options` may be NULL (single worker). */
CTXPROB_API ctxprob_status ctxprob_simulate(const ctxprob_model *model, const ctxprob_sample_sizes *sizes,
                                            uint64_t seed, const ctxprob_options *options,
                                            ctxprob_experiment **out);

/* Canonical JSON reports. `options` may be NULL for defaults. */
CTXPROB_API ctxprob_status ctxprob_analyze(const ctxprob_experiment *experiment, const ctxprob_options *options,
                                           ctxprob_text **report_out);
CTXPROB_API ctxprob_status ctxprob_reconstruct(const ctxprob_experiment *experiment,
                                               const ctxprob_options *options, ctxprob_text **report_out);
CTXPROB_API ctxprob_status ctxprob_balance(const ctxprob_experiment *experiment, const ctxprob_options *options,
                                           ctxprob_text **report_out);

/* Parameter sweeps. Families: "qubit" (axes alpha, phi, b_rotation,
 * b_phase), "synthetic" (prior1, t11, t21, lambda1), "classical" (seed).
 * Unset axes take a single default value. */
CTXPROB_API ctxprob_status ctxprob_sweep_new(const char *family, ctxprob_sweep **out);
CTXPROB_API ctxprob_status ctxprob_sweep_set_axis(ctxprob_sweep *sweep, const char *axis, const double *values,
                                                  size_t count);
CTXPROB_API ctxprob_status ctxprob_sweep_run(const ctxprob_sweep *sweep, const ctxprob_options *options,
                                             ctxprob_text **csv_out);
CTXPROB_API void ctxprob_sweep_free(ctxprob_sweep *sweep);

#ifdef __cplusplus
}
#endif

#endif
