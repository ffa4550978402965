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

#include "ctxprob/ctxprob.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "ctxprob/analysis.hpp"
#include "ctxprob/error.hpp"
#include "ctxprob/io.hpp"
#include "ctxprob/oracles.hpp"
#include "ctxprob/sampling.hpp"

struct ctxprob_options {
    ctxprob::AnalysisOptions value;
};

struct ctxprob_experiment {
    ctxprob::ExperimentFile value;
};

struct ctxprob_model {
    ctxprob::Model value;
};

struct ctxprob_sweep {
    ctxprob::SweepSpec value;
};

struct ctxprob_text {
    std::string value;
};

namespace {

using namespace ctxprob;

thread_local std::string last_message;
thread_local ctxprob_error_kind last_kind = CTXPROB_ERR_NONE;

ctxprob_error_kind to_c(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return CTXPROB_ERR_INVALID_INPUT;
        case ErrorKind::Inconsistent:
            return CTXPROB_ERR_INCONSISTENT;
        case ErrorKind::OutOfRange:
            return CTXPROB_ERR_OUT_OF_RANGE;
        case ErrorKind::DegenerateContext:
            return CTXPROB_ERR_DEGENERATE_CONTEXT;
        case ErrorKind::ZeroFiltration:
            return CTXPROB_ERR_ZERO_FILTRATION;
        case ErrorKind::EmptyEnsemble:
            return CTXPROB_ERR_EMPTY_ENSEMBLE;
        case ErrorKind::InfeasibleLambda:
            return CTXPROB_ERR_INFEASIBLE_LAMBDA;
        case ErrorKind::NonTrigonometric:
            return CTXPROB_ERR_NON_TRIGONOMETRIC;
        case ErrorKind::NotBalanced:
            return CTXPROB_ERR_NOT_BALANCED;
        case ErrorKind::GenerationExhausted:
            return CTXPROB_ERR_GENERATION_EXHAUSTED;
    }
    return CTXPROB_ERR_INVALID_INPUT;
}

template <class Body>
ctxprob_status guarded(Body &&body) {
    last_message.clear();
    last_kind = CTXPROB_ERR_NONE;
    try {
        body();
        return CTXPROB_OK;
    } catch (const Error &e) {
        last_message = e.what();
        last_kind = to_c(e.kind());
        return static_cast<ctxprob_status>(exit_category(e.kind()));
    } catch (const std::bad_alloc &) {
        last_message = "out of memory";
    } catch (const std::exception &e) {
        last_message = e.what();
    }
    last_kind = CTXPROB_ERR_INVALID_INPUT;
    return CTXPROB_INVALID_INPUT;
}

template <class... Ptr>
void require_non_null(const Ptr *...ptrs) {
    if (((ptrs == nullptr) || ...)) {
        fail(ErrorKind::InvalidInput, "null argument");
    }
}

ContextStatistics from_c(const ctxprob_statistics &s) {
    return ContextStatistics::make({s.prior[0], s.prior[1]},
                                   Matrix2{{{s.transition[0][0], s.transition[0][1]},
                                            {s.transition[1][0], s.transition[1][1]}}},
                                   {s.outcome[0], s.outcome[1]});
}

void to_c(const ContextStatistics &stats, ctxprob_statistics &out) {
    for (int k = 0; k < 2; ++k) {
        out.prior[k] = stats.prior[k];
        out.outcome[k] = stats.outcome[k];
        for (int j = 0; j < 2; ++j) {
            out.transition[k][j] = stats.transition(k, j);
        }
    }
}

Matrix2 matrix_from_c(const double m[2][2]) {
    return Matrix2{{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
}

const AnalysisOptions &options_or_default(const ctxprob_options *options) {
    static const AnalysisOptions defaults;
    return options ? options->value : defaults;
}

ctxprob_text *make_text(std::string s) {
    return new ctxprob_text{std::move(s)};
}

}  // namespace

extern "C" {

const char *ctxprob_version(void) {
    return "1.0.0";
}

const char *ctxprob_last_error_message(void) {
    return last_message.c_str();
}

ctxprob_error_kind ctxprob_last_error_kind(void) {
    return last_kind;
}

const char *ctxprob_text_data(const ctxprob_text *text) {
    return text ? text->value.c_str() : "";
}

size_t ctxprob_text_size(const ctxprob_text *text) {
    return text ? text->value.size() : 0;
}

void ctxprob_text_free(ctxprob_text *text) {
    delete text;
}

ctxprob_status ctxprob_predict_outcome(const double prior[2], const double transition[2][2], const double lambda[2],
                                       double outcome_out[2]) {
    return guarded([&] {
        require_non_null(prior, transition, lambda, outcome_out);
        const Pair out = predict_outcome(ProbabilityPair::make({prior[0], prior[1]}),
                                         TransitionMatrix::make(matrix_from_c(transition)),
                                         LambdaPair{{lambda[0], lambda[1]}});
        outcome_out[0] = out[0];
        outcome_out[1] = out[1];
    });
}

ctxprob_status ctxprob_lambda_from_statistics(const ctxprob_statistics *stats, double lambda_out[2]) {
    return guarded([&] {
        require_non_null(stats, lambda_out);
        const LambdaPair l = lambda_from_statistics(from_c(*stats));
        lambda_out[0] = l[0];
        lambda_out[1] = l[1];
    });
}

ctxprob_status ctxprob_classify(const double lambda[2], double eps_class, ctxprob_verdict *verdict_out) {
    return guarded([&] {
        require_non_null(lambda, verdict_out);
        *verdict_out = static_cast<ctxprob_verdict>(classify_theory(LambdaPair{{lambda[0], lambda[1]}}, eps_class).verdict);
    });
}

ctxprob_status ctxprob_double_stochastic(const double transition[2][2], double tolerance, int *is_double_stochastic_out) {
    return guarded([&] {
        require_non_null(transition, is_double_stochastic_out);
        *is_double_stochastic_out = check_double_stochastic(matrix_from_c(transition), tolerance).is_double_stochastic;
    });
}

ctxprob_status ctxprob_options_new(ctxprob_options **out) {
    return guarded([&] {
        require_non_null(out);
        *out = new ctxprob_options{};
    });
}

void ctxprob_options_free(ctxprob_options *options) {
    delete options;
}

ctxprob_status ctxprob_options_set_tolerance(ctxprob_options *options, double tolerance) {
    return guarded([&] {
        require_non_null(options);
        if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
            fail(ErrorKind::InvalidInput, "tolerance must be a finite nonnegative number");
        }
        options->value.tolerance = tolerance;
    });
}

ctxprob_status ctxprob_options_set_eps_class(ctxprob_options *options, double eps_class) {
    return guarded([&] {
        require_non_null(options);
        if (!(eps_class > 0.0) || !std::isfinite(eps_class)) {
            fail(ErrorKind::InvalidInput, "eps-class must be a finite positive number");
        }
        options->value.eps_class = eps_class;
    });
}

ctxprob_status ctxprob_options_set_bootstrap_replicates(ctxprob_options *options, uint64_t replicates) {
    return guarded([&] {
        require_non_null(options);
        if (replicates == 0) {
            fail(ErrorKind::InvalidInput, "bootstrap needs at least one replicate");
        }
        options->value.bootstrap_replicates = replicates;
    });
}

ctxprob_status ctxprob_options_set_seed(ctxprob_options *options, uint64_t seed) {
    return guarded([&] {
        require_non_null(options);
        options->value.seed = seed;
    });
}

ctxprob_status ctxprob_options_set_workers(ctxprob_options *options, unsigned workers) {
    return guarded([&] {
        require_non_null(options);
        options->value.workers = workers;
    });
}

ctxprob_status ctxprob_options_set_strict_degeneracy(ctxprob_options *options, int strict) {
    return guarded([&] {
        require_non_null(options);
        options->value.policy = strict ? DegeneracyPolicy::Fail : DegeneracyPolicy::ZeroLambda;
    });
}

ctxprob_status ctxprob_experiment_parse(const char *json, ctxprob_experiment **out) {
    return guarded([&] {
        require_non_null(json, out);
        *out = new ctxprob_experiment{parse_experiment(json)};
    });
}

ctxprob_status ctxprob_experiment_load(const char *path, ctxprob_experiment **out) {
    return guarded([&] {
        require_non_null(path, out);
        *out = new ctxprob_experiment{load_experiment(path)};
    });
}

ctxprob_status ctxprob_experiment_from_statistics(const ctxprob_statistics *stats, ctxprob_experiment **out) {
    return guarded([&] {
        require_non_null(stats, out);
        ExperimentFile file;
        file.data = from_c(*stats);
        *out = new ctxprob_experiment{std::move(file)};
    });
}

ctxprob_status ctxprob_experiment_to_json(const ctxprob_experiment *experiment, ctxprob_text **out) {
    return guarded([&] {
        require_non_null(experiment, out);
        *out = make_text(serialize_experiment(experiment->value));
    });
}

ctxprob_status ctxprob_experiment_statistics(const ctxprob_experiment *experiment, ctxprob_statistics *out) {
    return guarded([&] {
        require_non_null(experiment, out);
        const auto &data = experiment->value.data;
        if (const auto *exact = std::get_if<ContextStatistics>(&data)) {
            to_c(*exact, *out);
        } else {
            to_c(estimate_statistics(std::get<CountsRecord>(data)).point, *out);
        }
    });
}

void ctxprob_experiment_free(ctxprob_experiment *experiment) {
    delete experiment;
}

ctxprob_status ctxprob_model_qubit(double alpha, double phi, double b_rotation, double b_phase, ctxprob_model **out) {
    return guarded([&] {
        require_non_null(out);
        for (double v : {alpha, phi, b_rotation, b_phase}) {
            if (!std::isfinite(v)) {
                fail(ErrorKind::InvalidInput, "qubit angles must be finite");
            }
        }
        *out = new ctxprob_model{QubitModel{alpha, phi, b_rotation, b_phase}};
    });
}

ctxprob_status ctxprob_model_classical(const double *weights, const int *a_values, const int *b_values,
                                       size_t n_points, ctxprob_model **out) {
    return guarded([&] {
        require_non_null(weights, a_values, b_values, out);
        std::vector<ElementaryEvent> points;
        for (size_t k = 0; k < n_points; ++k) {
            points.push_back({weights[k], a_values[k] - 1, b_values[k] - 1});
        }
        *out = new ctxprob_model{KolmogorovModel::make(std::move(points))};
    });
}

ctxprob_status ctxprob_model_synthetic(const double prior[2], const double transition[2][2],
                                       const double target_lambda[2], ctxprob_model **out) {
    return guarded([&] {
        require_non_null(prior, transition, target_lambda, out);
        SyntheticModel m{{prior[0], prior[1]}, matrix_from_c(transition), LambdaPair{{target_lambda[0], target_lambda[1]}}};
        *out = new ctxprob_model{m};
    });
}

ctxprob_status ctxprob_model_preset(const char *name, ctxprob_model **out) {
    return guarded([&] {
        require_non_null(name, out);
        *out = new ctxprob_model{preset_model(name)};
    });
}

ctxprob_status ctxprob_model_random(ctxprob_model_kind kind, uint64_t seed, ctxprob_model **out) {
    return guarded([&] {
        require_non_null(out);
        if (kind < CTXPROB_MODEL_CLASSICAL || kind > CTXPROB_MODEL_SYNTHETIC_HYPERBOLIC) {
            fail(ErrorKind::InvalidInput, "unknown model kind");
        }
        *out = new ctxprob_model{random_model(static_cast<ModelKind>(kind), seed)};
    });
}

ctxprob_status ctxprob_model_statistics(const ctxprob_model *model, ctxprob_statistics *out) {
    return guarded([&] {
        require_non_null(model, out);
        to_c(exact_statistics(model->value), *out);
    });
}

void ctxprob_model_free(ctxprob_model *model) {
    delete model;
}

ctxprob_status ctxprob_simulate(const ctxprob_model *model, const ctxprob_sample_sizes *sizes, uint64_t seed,
                                const ctxprob_options *options, ctxprob_experiment **out) {
    return guarded([&] {
        require_non_null(model, sizes, out);
        const SampleSizes n{sizes->context, sizes->filtration, {sizes->filtered[0], sizes->filtered[1]}};
        ExperimentFile file;
        file.data = simulate_counts(model->value, n, seed, options_or_default(options).workers);
        file.model = model->value;
        *out = new ctxprob_experiment{std::move(file)};
    });
}

ctxprob_status ctxprob_analyze(const ctxprob_experiment *experiment, const ctxprob_options *options,
                               ctxprob_text **report_out) {
    return guarded([&] {
        require_non_null(experiment, report_out);
        const AnalysisReport report = analyze(experiment->value, options_or_default(options));
        *report_out = make_text(canonical_dump(report_to_json(report)));
    });
}

ctxprob_status ctxprob_reconstruct(const ctxprob_experiment *experiment, const ctxprob_options *options,
                                   ctxprob_text **report_out) {
    return guarded([&] {
        require_non_null(experiment, report_out);
        *report_out = make_text(canonical_dump(reconstruct(experiment->value, options_or_default(options))));
    });
}

ctxprob_status ctxprob_balance(const ctxprob_experiment *experiment, const ctxprob_options *options,
                               ctxprob_text **report_out) {
    return guarded([&] {
        require_non_null(experiment, report_out);
        *report_out = make_text(canonical_dump(balance(experiment->value, options_or_default(options))));
    });
}

ctxprob_status ctxprob_sweep_new(const char *family, ctxprob_sweep **out) {
    return guarded([&] {
        require_non_null(family, out);
        sweep_axes(family);
        *out = new ctxprob_sweep{SweepSpec{family, {}}};
    });
}

ctxprob_status ctxprob_sweep_set_axis(ctxprob_sweep *sweep, const char *axis, const double *values, size_t count) {
    return guarded([&] {
        require_non_null(sweep, axis);
        if (count > 0) {
            require_non_null(values);
        }
        sweep->value.axes[axis] = std::vector<double>(values, values + count);
    });
}

ctxprob_status ctxprob_sweep_run(const ctxprob_sweep *sweep, const ctxprob_options *options, ctxprob_text **csv_out) {
    return guarded([&] {
        require_non_null(sweep, csv_out);
        *csv_out = make_text(run_sweep(sweep->value, options_or_default(options)));
    });
}

void ctxprob_sweep_free(ctxprob_sweep *sweep) {
    delete sweep;
}

}  // extern "C"
