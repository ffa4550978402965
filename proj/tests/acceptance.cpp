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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "ctxprob/calculus.hpp"
#include "ctxprob/ctxprob.h"
#include "ctxprob/error.hpp"
#include "ctxprob/hilbert.hpp"
#include "ctxprob/oracles.hpp"
#include "ctxprob/rng.hpp"
#include "ctxprob/sampling.hpp"
#include "test_oracles.hpp"

using namespace ctxprob;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(bool ok, const std::string &name, const std::string &detail) {
    std::printf("%s  %-32s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

unsigned workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

double max_abs(const LambdaPair &l) {
    return std::max(std::abs(l[0]), std::abs(l[1]));
}

double stats_gap(const ContextStatistics &s, const ctxprob_test::RawStats &r) {
    double gap = 0.0;
    for (int i = 0; i < 2; ++i) {
        gap = std::max({gap, std::abs(s.prior[i] - r.prior[i]), std::abs(s.outcome[i] - r.outcome[i])});
        for (int j = 0; j < 2; ++j) {
            gap = std::max(gap, std::abs(s.transition(i, j) - r.transition[i][j]));
        }
    }
    return gap;
}

void classical_oracle_equivalence() {
    constexpr int kModels = 10000;
    double worst = 0.0;
    double oracle_gap = 0.0;
    bool shape_ok = true;
    for (int k = 0; k < kModels; ++k) {
        const auto m = std::get<KolmogorovModel>(random_model(ModelKind::Classical, k));
        std::array<std::array<double, 2>, 2> joint{};
        bool has_b[2] = {false, false};
        for (const auto &pt : m.points) {
            joint[pt.b][pt.a] += pt.weight;
            has_b[pt.b] = has_b[pt.b] || pt.weight > 0.0;
        }
        shape_ok = shape_ok && m.points.size() <= 16 && has_b[0] && has_b[1];
        const ContextStatistics s = classical_statistics(m);
        oracle_gap = std::max(oracle_gap, stats_gap(s, ctxprob_test::bayes_oracle(joint)));
        worst = std::max(worst, max_abs(lambda_from_statistics(s)));
    }
    report(worst <= 1e-12 && shape_ok && oracle_gap <= 1e-12, "classical-oracle equivalence",
           fmt("%.0f models, max|lambda| = %.3g (<= 1e-12), Bayes gap %.3g", kModels, worst, oracle_gap));
}

void quantum_balance_law() {
    constexpr int kModels = 10000;
    double col = 0.0;
    double lam = 0.0;
    double oracle_gap = 0.0;
    for (int k = 0; k < kModels; ++k) {
        const auto m = std::get<QubitModel>(random_model(ModelKind::Qubit, k));
        const ContextStatistics s = qubit_statistics(m);
        oracle_gap = std::max(oracle_gap,
                              stats_gap(s, ctxprob_test::born_oracle(m.alpha, m.phi, m.b_rotation, m.b_phase)));
        const BalanceReport b = check_double_stochastic(s.transition.entries());
        col = std::max({col, b.column_residuals[0], b.column_residuals[1]});
        lam = std::max(lam, max_abs(lambda_from_statistics(s)));
    }
    report(col <= 1e-12 && lam <= 1.0 + 1e-9 && oracle_gap <= 1e-12, "quantum balance law",
           fmt("%.0f models, max column residual %.3g (<= 1e-12), max|lambda| = %.17g", kModels, col, lam));
}

void named_instance_e1() {
    const auto stats = ContextStatistics::make({0.5, 0.5}, {{{0.5, 0.5}, {0.5, 0.5}}}, {0.75, 0.25});
    const LambdaPair l = lambda_from_statistics(stats);
    const PhasePair ph = phase_parametrization(l);
    const bool trig = is_trigonometric(ph);
    const double t0 = trig ? std::get<TrigPhase>(ph[0]).theta : NAN;
    const double t1 = trig ? std::get<TrigPhase>(ph[1]).theta : NAN;
    const double err = std::max({std::abs(l[0] - 0.5), std::abs(l[1] + 0.5), std::abs(t0 - pi / 3),
                                 std::abs(t1 - 2 * pi / 3)});
    const Verdict v = classify_theory(l).verdict;

    const QubitModel q{pi / 6, pi / 2, pi / 4, 0.0};
    const ContextStatistics qs = qubit_statistics(q);
    const double gap = std::max(stats_gap(qs, ctxprob_test::born_oracle(q.alpha, q.phi, q.b_rotation, q.b_phase)),
                                stats_gap(qs, ctxprob_test::RawStats{{0.5, 0.5}, {{{0.5, 0.5}, {0.5, 0.5}}},
                                                                     {0.75, 0.25}}));
    const LambdaPair ql = lambda_from_statistics(qs);
    const double qerr = std::max(std::abs(ql[0] - 0.5), std::abs(ql[1] + 0.5));
    report(err <= 1e-12 && v == Verdict::Trigonometric && gap <= 1e-12 && qerr <= 1e-12, "named instance E1",
           fmt("lambda/theta error %.3g, qubit oracle gap %.3g, qubit lambda error %.3g", err, gap, qerr) +
               ", class " + verdict_name(v));
}

void named_instance_e3() {
    const auto stats = ContextStatistics::make({0.5, 0.5}, {{{0.8, 0.2}, {0.2, 0.8}}}, {1.0, 0.0});
    const LambdaPair l = lambda_from_statistics(stats);
    const PhasePair ph = phase_parametrization(l);
    double err = std::max(std::abs(l[0] - 1.25), std::abs(l[1] + 1.25));
    bool signs = false;
    if (!is_trigonometric(ph) && std::holds_alternative<HyperPhase>(ph[0]) &&
        std::holds_alternative<HyperPhase>(ph[1])) {
        const auto h0 = std::get<HyperPhase>(ph[0]);
        const auto h1 = std::get<HyperPhase>(ph[1]);
        err = std::max({err, std::abs(h0.theta - std::log(2.0)), std::abs(h1.theta - std::log(2.0))});
        signs = h0.sign == 1 && h1.sign == -1;
    } else {
        err = INFINITY;
    }
    const Verdict v = classify_theory(l).verdict;
    report(err <= 1e-12 && signs && v == Verdict::Hyperbolic, "named instance E3",
           fmt("lambda/ln2 error %.3g", err) + ", class " + verdict_name(v));
}

void parallelogram_born() {
    constexpr int kInstances = 10000;
    auto rng = ctxprob_test::test_rng(101);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    std::uniform_real_distribution<double> th(0.0, pi);
    double born = 0.0;
    double norm = 0.0;
    int done = 0;
    bool all_trig = true;
    while (done < kInstances) {
        const double p = u(rng), a = u(rng), b = u(rng), theta = th(rng);
        const double w0 = std::sqrt(p * (1 - p) * a * b);
        const double w1 = std::sqrt(p * (1 - p) * (1 - a) * (1 - b));
        if (std::abs(w0 * std::cos(theta) / w1) > 1.0) {
            continue;
        }
        const double o = ctxprob_test::parallelogram_outcome(p, a, 1 - p, b, std::cos(theta));
        const auto stats = ContextStatistics::make({p, 1 - p}, {{{a, 1 - a}, {b, 1 - b}}}, {o, 1 - o});
        const PhasePair ph = phase_parametrization(lambda_from_statistics(stats));
        if (!is_trigonometric(ph)) {
            all_trig = false;
            ++done;
            continue;
        }
        const AmplitudePair amps = lift_to_amplitudes(stats, ph);
        born = std::max(born, born_residual(amps, stats.outcome.values()));
        norm = std::max(norm, std::abs(std::norm(amps.psi[0]) + std::norm(amps.psi[1]) - 1.0));
        ++done;
    }
    report(all_trig && born <= 1e-12 && norm <= 1e-12, "parallelogram/Born",
           fmt("%.0f instances, max Born residual %.3g, max norm error %.3g (<= 1e-12)", kInstances, born, norm));
}

void balance_phase_identity() {
    auto rng = ctxprob_test::test_rng(102);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> th(0.0, pi);
    double worst = 0.0;
    int checked = 0;
    // Synthetic doubly stochastic instances across the whole trigonometric range.
    for (int k = 0; k < 10000; ++k) {
        const double p = 0.01 + 0.98 * u(rng), t = 0.01 + 0.98 * u(rng), theta = th(rng);
        const double o = ctxprob_test::parallelogram_outcome(p, t, 1 - p, 1 - t, std::cos(theta));
        const auto stats = ContextStatistics::make({p, 1 - p}, {{{t, 1 - t}, {1 - t, t}}}, {o, 1 - o});
        const PhasePair ph = phase_parametrization(lambda_from_statistics(stats));
        worst = std::max(worst, balance_phase_constraint(stats, ph).residual);
        ++checked;
    }
    // Random qubits are doubly stochastic by construction.
    for (int k = 0; k < 10000; ++k) {
        const auto s = qubit_statistics(std::get<QubitModel>(random_model(ModelKind::Qubit, 50000 + k)));
        const LambdaPair l = lambda_from_statistics(s);
        const LambdaPair clipped{{std::clamp(l[0], -1.0, 1.0), std::clamp(l[1], -1.0, 1.0)}};
        worst = std::max(worst, balance_phase_constraint(s, phase_parametrization(clipped)).residual);
        ++checked;
    }
    report(worst <= 1e-9, "balance-phase identity",
           fmt("%.0f doubly stochastic instances, max |cos t1 + cos t2| = %.3g (<= 1e-9)", checked, worst));
}

void round_trip() {
    constexpr int kInstances = 10000;
    auto rng = ctxprob_test::test_rng(103);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> lam(-2.0, 2.0);
    double forward = 0.0;
    double backward = 0.0;
    int converse = 0;
    for (int k = 0; k < kInstances; ++k) {
        const double p = 0.02 + 0.96 * u(rng), a = 0.02 + 0.96 * u(rng), b = 0.02 + 0.96 * u(rng), o = u(rng);
        const auto prior = ProbabilityPair::make({p, 1 - p});
        const auto t = TransitionMatrix::from_rows({a, 1 - a}, {b, 1 - b});
        const ContextStatistics stats{prior, t, ProbabilityPair::make({o, 1 - o})};
        const Pair back = predict_outcome(prior, t, lambda_from_statistics(stats));
        forward = std::max({forward, std::abs(back[0] - o), std::abs(back[1] - (1 - o))});
    }
    while (converse < kInstances) {
        const double p = 0.02 + 0.96 * u(rng), a = 0.02 + 0.96 * u(rng), b = 0.02 + 0.96 * u(rng);
        const auto prior = ProbabilityPair::make({p, 1 - p});
        const auto t = TransitionMatrix::from_rows({a, 1 - a}, {b, 1 - b});
        const double l0 = lam(rng);
        const LambdaPair target{{l0, companion_lambda(prior, t, l0)}};
        Pair out{};
        try {
            out = predict_outcome(prior, t, target);
        } catch (const Error &) {
            continue;
        }
        const LambdaPair l = lambda_from_statistics(ContextStatistics{prior, t, ProbabilityPair::make(out)});
        backward = std::max({backward, std::abs(l[0] - target[0]), std::abs(l[1] - target[1])});
        ++converse;
    }
    report(forward <= 1e-12 && backward <= 1e-12, "round-trip",
           fmt("%.0f instances each way, max error %.3g / %.3g (<= 1e-12)", kInstances, forward, backward));
}

void sampling_consistency() {
    const ContextStatistics e1 = qubit_statistics(std::get<QubitModel>(preset_model("e1")));
    int good = 0;
    for (std::uint64_t run = 0; run < 100; ++run) {
        const auto est = estimate_statistics(simulate_counts(e1, SampleSizes::uniform(1000000), run, workers()));
        good += std::abs(lambda_from_statistics(est.point)[0] - 0.5) <= 0.01 ? 1 : 0;
    }
    report(good >= 99, "sampling consistency (n=1e6)", fmt("%.0f/100 runs with |lambda1 - 0.5| <= 0.01", good));

    const std::vector<std::uint64_t> grid{1000, 10000, 100000, 1000000};
    const auto rows = convergence_study(e1, grid, 100, 2024, workers());
    bool ok = rows.size() == grid.size();
    std::string detail = "scaled error";
    for (std::size_t k = 0; ok && k < rows.size(); ++k) {
        ok = ok && rows[k].failures == 0;
        if (k > 0) {
            ok = ok && rows[k].mean_abs_error[0] < rows[k - 1].mean_abs_error[0];
        }
        const double ratio = rows[k].mean_abs_error[0] * std::sqrt(static_cast<double>(rows[k].n)) /
                             (rows[0].mean_abs_error[0] * std::sqrt(static_cast<double>(rows[0].n)));
        ok = ok && ratio >= 0.5 && ratio <= 2.0;
        detail += fmt(" %.3f", ratio);
    }
    report(ok, "convergence n^-1/2", detail + " relative to n=1e3 (within [0.5, 2], monotone)");
}

void bootstrap_coverage() {
    const ContextStatistics e1 = qubit_statistics(std::get<QubitModel>(preset_model("e1")));
    constexpr int kReplications = 500;
    int covered[2] = {0, 0};
    std::size_t failed = 0;
    for (int r = 0; r < kReplications; ++r) {
        const std::uint64_t seed = derive_seed(777, "coverage", r);
        const auto est = estimate_statistics(simulate_counts(e1, SampleSizes::uniform(10000), seed));
        const LambdaEstimate l = estimate_lambda(est, BootstrapSettings{1000, seed, 0.95, workers()});
        failed += l.failed_replicates;
        covered[0] += (l.ci_low[0] <= 0.5 && 0.5 <= l.ci_high[0]) ? 1 : 0;
        covered[1] += (l.ci_low[1] <= -0.5 && -0.5 <= l.ci_high[1]) ? 1 : 0;
    }
    const double c0 = static_cast<double>(covered[0]) / kReplications;
    const double c1 = static_cast<double>(covered[1]) / kReplications;
    const bool ok = std::abs(c0 - 0.95) <= 0.04 && std::abs(c1 - 0.95) <= 0.04;
    report(ok, "bootstrap coverage (n=1e4)",
           fmt("coverage %.3f / %.3f over 500 replications (95%% +- 4%%), failed replicates %.0f", c0, c1,
               static_cast<double>(failed)));
}

std::string capi_pipeline(unsigned nworkers, std::string *file_out) {
    ctxprob_model *model = nullptr;
    ctxprob_options *opts = nullptr;
    ctxprob_experiment *exp = nullptr;
    ctxprob_text *text = nullptr;
    std::string report_text;
    if (ctxprob_model_preset("e1", &model) != CTXPROB_OK || ctxprob_options_new(&opts) != CTXPROB_OK) {
        return "";
    }
    ctxprob_options_set_workers(opts, nworkers);
    ctxprob_options_set_bootstrap_replicates(opts, 1000);
    const ctxprob_sample_sizes sizes{100000, 100000, {100000, 100000}};
    if (ctxprob_simulate(model, &sizes, 12345, opts, &exp) == CTXPROB_OK) {
        if (ctxprob_experiment_to_json(exp, &text) == CTXPROB_OK) {
            *file_out = ctxprob_text_data(text);
            ctxprob_text_free(text);
        }
        if (ctxprob_analyze(exp, opts, &text) == CTXPROB_OK) {
            report_text = ctxprob_text_data(text);
            ctxprob_text_free(text);
        }
    }
    ctxprob_experiment_free(exp);
    ctxprob_options_free(opts);
    ctxprob_model_free(model);
    return report_text;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void reproducibility() {
    std::string file1, file4, again;
    const std::string r1 = capi_pipeline(1, &file1);
    const std::string r4 = capi_pipeline(4, &file4);
    const std::string r1b = capi_pipeline(1, &again);
    const bool api_ok = !r1.empty() && !file1.empty() && r1 == r4 && r1 == r1b && file1 == file4 && file1 == again;

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("ctxprob_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = CTXPROB_CLI_PATH;
    auto run = [&](const std::string &args) {
        const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    bool cli_ok = true;
    for (int k = 0; k < 2; ++k) {
        const std::string threads = k == 0 ? "1" : "4";
        const std::string sim = (dir / ("sim" + std::to_string(k) + ".json")).string();
        const std::string rep = (dir / ("rep" + std::to_string(k) + ".json")).string();
        cli_ok = cli_ok && run("simulate --preset e1 --model qubit --n 100000 --seed 99 --threads " + threads +
                               " --output \"" + sim + "\"");
        cli_ok = cli_ok && run("analyze \"" + sim + "\" --bootstrap-replicates 500 --threads " + threads +
                               " --output \"" + rep + "\"");
    }
    const std::string s0 = slurp(dir / "sim0.json"), s1 = slurp(dir / "sim1.json");
    const std::string a0 = slurp(dir / "rep0.json"), a1 = slurp(dir / "rep1.json");
    cli_ok = cli_ok && !s0.empty() && s0 == s1 && !a0.empty() && a0 == a1;
    fs::remove_all(dir);
    report(api_ok && cli_ok, "reproducibility",
           std::string("C API 1 vs 4 workers and rerun: ") + (api_ok ? "identical" : "DIFFERENT") +
               "; CLI simulate+analyze 1 vs 4 threads: " + (cli_ok ? "identical" : "DIFFERENT"));
}

template <class F>
void guarded(const char *name, F &&f) {
    try {
        f();
    } catch (const std::exception &e) {
        report(false, name, std::string("unexpected error: ") + e.what());
    }
}

}  // namespace

int main() {
    guarded("classical-oracle equivalence", classical_oracle_equivalence);
    guarded("quantum balance law", quantum_balance_law);
    guarded("named instance E1", named_instance_e1);
    guarded("named instance E3", named_instance_e3);
    guarded("parallelogram/Born", parallelogram_born);
    guarded("balance-phase identity", balance_phase_identity);
    guarded("round-trip", round_trip);
    guarded("sampling consistency", sampling_consistency);
    guarded("bootstrap coverage", bootstrap_coverage);
    guarded("reproducibility", reproducibility);
    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
