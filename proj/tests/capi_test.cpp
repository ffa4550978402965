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
#include <numbers>
#include <string>

#include "gtest/gtest.h"

namespace {

constexpr double pi = std::numbers::pi;

std::string take(ctxprob_text *text) {
    std::string s(ctxprob_text_data(text), ctxprob_text_size(text));
    ctxprob_text_free(text);
    return s;
}

const char *kE1 = R"({"format_version": 1, "exact": {"prior": [0.5, 0.5],
 "transition": [[0.5, 0.5], [0.5, 0.5]], "outcome": [0.75, 0.25]}})";
const char *kE3 = R"({"format_version": 1, "exact": {"prior": [0.5, 0.5],
 "transition": [[0.8, 0.2], [0.2, 0.8]], "outcome": [1.0, 0.0]}})";

}  // namespace

TEST(CApi, version) {
    EXPECT_STREQ(ctxprob_version(), "1.0.0");
}

TEST(CApi, calculus_entry_points) {
    const double prior[2] = {0.5, 0.5};
    const double t[2][2] = {{0.5, 0.5}, {0.5, 0.5}};
    const double lambda[2] = {0.5, -0.5};
    double out[2] = {};
    ASSERT_EQ(ctxprob_predict_outcome(prior, t, lambda, out), CTXPROB_OK);
    EXPECT_NEAR(out[0], 0.75, 1e-15);

    ctxprob_statistics stats{{0.5, 0.5}, {{0.8, 0.2}, {0.2, 0.8}}, {1.0, 0.0}};
    double l[2] = {};
    ASSERT_EQ(ctxprob_lambda_from_statistics(&stats, l), CTXPROB_OK);
    EXPECT_NEAR(l[0], 1.25, 1e-12);

    ctxprob_verdict v{};
    ASSERT_EQ(ctxprob_classify(l, 1e-6, &v), CTXPROB_OK);
    EXPECT_EQ(v, CTXPROB_HYPERBOLIC);

    int ds = 0;
    ASSERT_EQ(ctxprob_double_stochastic(stats.transition, 1e-9, &ds), CTXPROB_OK);
    EXPECT_EQ(ds, 1);
}

TEST(CApi, error_status_and_kind) {
    ctxprob_statistics degenerate{{0.5, 0.5}, {{1.0, 0.0}, {0.0, 1.0}}, {0.6, 0.4}};
    double l[2] = {};
    EXPECT_EQ(ctxprob_lambda_from_statistics(&degenerate, l), CTXPROB_DEGENERATE);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_DEGENERATE_CONTEXT);
    EXPECT_GT(std::strlen(ctxprob_last_error_message()), 0u);

    ctxprob_statistics bad{{0.5, 0.6}, {{0.5, 0.5}, {0.5, 0.5}}, {0.5, 0.5}};
    EXPECT_EQ(ctxprob_lambda_from_statistics(&bad, l), CTXPROB_INFEASIBLE);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_INCONSISTENT);

    EXPECT_EQ(ctxprob_lambda_from_statistics(nullptr, l), CTXPROB_INVALID_INPUT);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_INVALID_INPUT);

    ctxprob_statistics ok{{0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}}, {0.75, 0.25}};
    EXPECT_EQ(ctxprob_lambda_from_statistics(&ok, l), CTXPROB_OK);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_NONE);
}

TEST(CApi, options_validation) {
    ctxprob_options *opts = nullptr;
    ASSERT_EQ(ctxprob_options_new(&opts), CTXPROB_OK);
    EXPECT_EQ(ctxprob_options_set_tolerance(opts, -1.0), CTXPROB_INVALID_INPUT);
    EXPECT_EQ(ctxprob_options_set_eps_class(opts, NAN), CTXPROB_INVALID_INPUT);
    EXPECT_EQ(ctxprob_options_set_bootstrap_replicates(opts, 0), CTXPROB_INVALID_INPUT);
    EXPECT_EQ(ctxprob_options_set_tolerance(opts, 1e-8), CTXPROB_OK);
    EXPECT_EQ(ctxprob_options_set_tolerance(nullptr, 1e-8), CTXPROB_INVALID_INPUT);
    ctxprob_options_free(opts);
    ctxprob_options_free(nullptr);
}

TEST(CApi, experiment_round_trip) {
    ctxprob_experiment *exp = nullptr;
    ASSERT_EQ(ctxprob_experiment_parse(kE1, &exp), CTXPROB_OK);
    ctxprob_text *json = nullptr;
    ASSERT_EQ(ctxprob_experiment_to_json(exp, &json), CTXPROB_OK);
    const std::string text = take(json);
    ctxprob_experiment *again = nullptr;
    ASSERT_EQ(ctxprob_experiment_parse(text.c_str(), &again), CTXPROB_OK);
    ASSERT_EQ(ctxprob_experiment_to_json(again, &json), CTXPROB_OK);
    EXPECT_EQ(take(json), text);
    ctxprob_statistics s{};
    ASSERT_EQ(ctxprob_experiment_statistics(again, &s), CTXPROB_OK);
    EXPECT_EQ(s.outcome[0], 0.75);
    ctxprob_experiment_free(exp);
    ctxprob_experiment_free(again);

    EXPECT_EQ(ctxprob_experiment_parse("{", &exp), CTXPROB_INVALID_INPUT);
    EXPECT_EQ(ctxprob_experiment_load("/nonexistent.json", &exp), CTXPROB_INVALID_INPUT);
}

TEST(CApi, analyze_reconstruct_balance) {
    ctxprob_experiment *e1 = nullptr;
    ctxprob_experiment *e3 = nullptr;
    ASSERT_EQ(ctxprob_experiment_parse(kE1, &e1), CTXPROB_OK);
    ASSERT_EQ(ctxprob_experiment_parse(kE3, &e3), CTXPROB_OK);
    ctxprob_text *out = nullptr;
    ASSERT_EQ(ctxprob_analyze(e1, nullptr, &out), CTXPROB_OK);
    EXPECT_NE(take(out).find("\"verdict\": \"Trigonometric\""), std::string::npos);
    ASSERT_EQ(ctxprob_reconstruct(e1, nullptr, &out), CTXPROB_OK);
    EXPECT_NE(take(out).find("\"psi\""), std::string::npos);
    ASSERT_EQ(ctxprob_balance(e1, nullptr, &out), CTXPROB_OK);
    EXPECT_NE(take(out).find("\"is_double_stochastic\": true"), std::string::npos);
    EXPECT_EQ(ctxprob_reconstruct(e3, nullptr, &out), CTXPROB_INFEASIBLE);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_NON_TRIGONOMETRIC);
    EXPECT_EQ(ctxprob_analyze(nullptr, nullptr, &out), CTXPROB_INVALID_INPUT);
    ctxprob_experiment_free(e1);
    ctxprob_experiment_free(e3);
}

TEST(CApi, models) {
    ctxprob_model *m = nullptr;
    ctxprob_statistics s{};
    ASSERT_EQ(ctxprob_model_qubit(pi / 6, pi / 2, pi / 4, 0.0, &m), CTXPROB_OK);
    ASSERT_EQ(ctxprob_model_statistics(m, &s), CTXPROB_OK);
    EXPECT_NEAR(s.outcome[0], 0.75, 1e-12);
    ctxprob_model_free(m);

    const double w[4] = {0.06, 0.24, 0.42, 0.28};
    const int a[4] = {1, 2, 1, 2};
    const int b[4] = {1, 1, 2, 2};
    ASSERT_EQ(ctxprob_model_classical(w, a, b, 4, &m), CTXPROB_OK);
    ASSERT_EQ(ctxprob_model_statistics(m, &s), CTXPROB_OK);
    EXPECT_NEAR(s.outcome[0], 0.48, 1e-15);
    ctxprob_model_free(m);

    const int bad_a[4] = {0, 2, 1, 2};
    EXPECT_EQ(ctxprob_model_classical(w, bad_a, b, 4, &m), CTXPROB_INVALID_INPUT);
    const int one_b[4] = {1, 1, 1, 1};
    ASSERT_EQ(ctxprob_model_classical(w, a, one_b, 4, &m), CTXPROB_OK);
    EXPECT_EQ(ctxprob_model_statistics(m, &s), CTXPROB_DEGENERATE);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_ZERO_FILTRATION);
    ctxprob_model_free(m);

    const double prior[2] = {0.5, 0.5};
    const double t[2][2] = {{0.8, 0.2}, {0.2, 0.8}};
    const double lam[2] = {2.0, -2.0};
    ASSERT_EQ(ctxprob_model_synthetic(prior, t, lam, &m), CTXPROB_OK);
    EXPECT_EQ(ctxprob_model_statistics(m, &s), CTXPROB_INFEASIBLE);
    EXPECT_EQ(ctxprob_last_error_kind(), CTXPROB_ERR_INFEASIBLE_LAMBDA);
    ctxprob_model_free(m);

    EXPECT_EQ(ctxprob_model_preset("nope", &m), CTXPROB_INVALID_INPUT);
    ASSERT_EQ(ctxprob_model_random(CTXPROB_MODEL_SYNTHETIC_HYPERBOLIC, 5, &m), CTXPROB_OK);
    ASSERT_EQ(ctxprob_model_statistics(m, &s), CTXPROB_OK);
    ctxprob_model_free(m);
}

TEST(CApi, simulate_then_analyze_is_reproducible) {
    ctxprob_model *m = nullptr;
    ASSERT_EQ(ctxprob_model_preset("e1", &m), CTXPROB_OK);
    const ctxprob_sample_sizes sizes{10000, 10000, {10000, 10000}};
    ctxprob_options *one = nullptr;
    ctxprob_options *four = nullptr;
    ctxprob_options_new(&one);
    ctxprob_options_new(&four);
    ctxprob_options_set_workers(four, 4);
    ctxprob_options_set_bootstrap_replicates(one, 200);
    ctxprob_options_set_bootstrap_replicates(four, 200);

    std::string reports[2];
    std::string files[2];
    ctxprob_options *opts[2] = {one, four};
    for (int k = 0; k < 2; ++k) {
        ctxprob_experiment *exp = nullptr;
        ASSERT_EQ(ctxprob_simulate(m, &sizes, 42, opts[k], &exp), CTXPROB_OK);
        ctxprob_text *t = nullptr;
        ASSERT_EQ(ctxprob_experiment_to_json(exp, &t), CTXPROB_OK);
        files[k] = take(t);
        ASSERT_EQ(ctxprob_analyze(exp, opts[k], &t), CTXPROB_OK);
        reports[k] = take(t);
        ctxprob_experiment_free(exp);
    }
    EXPECT_EQ(files[0], files[1]);
    EXPECT_EQ(reports[0], reports[1]);
    EXPECT_NE(files[0].find("\"family\": \"qubit\""), std::string::npos);
    EXPECT_NE(files[0].find("\"seed\": 42"), std::string::npos);

    const ctxprob_sample_sizes empty{0, 10, {10, 10}};
    ctxprob_experiment *exp = nullptr;
    EXPECT_EQ(ctxprob_simulate(m, &empty, 1, nullptr, &exp), CTXPROB_INVALID_INPUT);
    ctxprob_options_free(one);
    ctxprob_options_free(four);
    ctxprob_model_free(m);
}

TEST(CApi, sweep) {
    ctxprob_sweep *sw = nullptr;
    EXPECT_EQ(ctxprob_sweep_new("quantum", &sw), CTXPROB_INVALID_INPUT);
    ASSERT_EQ(ctxprob_sweep_new("synthetic", &sw), CTXPROB_OK);
    const double lambdas[3] = {0.0, 0.5, 1.25};
    ASSERT_EQ(ctxprob_sweep_set_axis(sw, "lambda1", lambdas, 3), CTXPROB_OK);
    ctxprob_text *csv = nullptr;
    ASSERT_EQ(ctxprob_sweep_run(sw, nullptr, &csv), CTXPROB_OK);
    const std::string text = take(csv);
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "prior1,t11,t21,lambda1,p1,p2,p11,p12,p21,p22,p1a,p2a,lambda1,lambda2,theta1,theta2,class,"
              "col_residual_max");
    EXPECT_NE(text.find("Hyperbolic"), std::string::npos);
    EXPECT_EQ(ctxprob_sweep_set_axis(sw, "lambda1", lambdas, 0), CTXPROB_OK);
    EXPECT_EQ(ctxprob_sweep_run(sw, nullptr, &csv), CTXPROB_INVALID_INPUT);
    ctxprob_sweep_free(sw);
}
