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

#include "ctxprob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

Json phases_to_json(const PhasePair &phases) {
    Json out = Json::array();
    for (const Phase &phase : phases) {
        if (const auto *trig = std::get_if<TrigPhase>(&phase)) {
            out.push_back(Json{{"kind", "trigonometric"}, {"theta", trig->theta}});
        } else {
            const auto &hyper = std::get<HyperPhase>(phase);
            out.push_back(Json{{"kind", "hyperbolic"}, {"sign", hyper.sign}, {"theta", hyper.theta}});
        }
    }
    return out;
}

Json class_to_json(const TheoryClass &tc) {
    Json components = Json::array();
    for (int c : tc.components) {
        components.push_back(c + 1);
    }
    return Json{{"verdict", verdict_name(tc.verdict)}, {"components", components}, {"eps_class", tc.eps_class}};
}

Json balance_to_json(const BalanceReport &b) {
    Json j{{"row_residuals", pair_to_json(b.row_residuals)},
           {"is_stochastic", b.is_stochastic},
           {"tolerance", b.tolerance}};
    if (b.columns_checked) {
        j["column_residuals"] = pair_to_json(b.column_residuals);
        j["is_double_stochastic"] = b.is_double_stochastic;
    }
    return j;
}

Json amplitudes_to_json(const AmplitudePair &amps) {
    Json psi = Json::array();
    for (const auto &z : amps.psi) {
        psi.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    }
    return psi;
}

// Column sums of sampled matrices fluctuate at the scale of their standard
// errors; the balance check is judged at three of those.
double sampled_balance_tolerance(const EstimatedStatistics &est, double floor) {
    double worst = 0.0;
    for (int j = 0; j < 2; ++j) {
        const double se = std::hypot(est.transition_stderr[0][j], est.transition_stderr[1][j]);
        worst = std::max(worst, 3.0 * se);
    }
    return std::max(floor, worst);
}

struct Evaluated {
    ContextStatistics stats;
    std::optional<EstimatedStatistics> estimated;
    double balance_tolerance;
};

Evaluated evaluate(const ExperimentFile &file, const AnalysisOptions &options) {
    if (const auto *exact = std::get_if<ContextStatistics>(&file.data)) {
        return {*exact, std::nullopt, options.tolerance};
    }
    EstimatedStatistics est = estimate_statistics(std::get<CountsRecord>(file.data));
    const double tol = sampled_balance_tolerance(est, options.tolerance);
    return {est.point, est, tol};
}

}  // namespace

AnalysisReport analyze(const ExperimentFile &file, const AnalysisOptions &options) {
    const Evaluated ev = evaluate(file, options);
    AnalysisReport report{file.observable_a, file.observable_b, ev.stats, ev.estimated, {}, std::nullopt, {},
                          {},                {},                0.0,      std::nullopt, std::nullopt, std::nullopt,
                          options.tolerance};
    report.lambda = lambda_from_statistics(ev.stats, options.policy);
    if (ev.estimated) {
        BootstrapSettings settings;
        settings.replicates = options.bootstrap_replicates;
        settings.seed = options.seed.value_or(std::get<CountsRecord>(file.data).seed);
        settings.confidence = options.confidence;
        settings.workers = options.workers;
        report.estimate = estimate_lambda(*ev.estimated, settings, options.eps_class.value_or(0.0));
        report.theory_class = report.estimate->classification;
        report.phase_tolerance = std::max(options.tolerance,
                                          3.0 * std::hypot(report.estimate->stderr[0], report.estimate->stderr[1]));
    } else {
        report.theory_class = classify_theory(report.lambda, options.eps_class.value_or(kEpsClassExact));
    }
    report.phases = phase_parametrization(report.lambda);
    report.balance = check_double_stochastic(ev.stats.transition.entries(), ev.balance_tolerance);
    report.normalization_residual = normalization_residual(ev.stats, report.lambda);

    const Verdict v = report.theory_class.verdict;
    if (v == Verdict::Classical || v == Verdict::Trigonometric) {
        report.amplitudes = lift_to_amplitudes(ev.stats, report.phases);
        report.born_residual = born_residual(*report.amplitudes, ev.stats.outcome.values());
    }
    if (is_trigonometric(report.phases) && report.balance.is_double_stochastic) {
        PhaseConstraint pc = balance_phase_constraint(ev.stats, report.phases, ev.balance_tolerance);
        pc.holds = pc.residual <= report.phase_tolerance;
        report.phase_constraint = pc;
    }
    return report;
}

Json report_to_json(const AnalysisReport &r) {
    Json j{{"observables", Json{{"A", r.observable_a.name}, {"B", r.observable_b.name}}},
           {"source", r.estimated ? "counts" : "exact"},
           {"statistics", statistics_to_json(r.statistics)},
           {"phases", phases_to_json(r.phases)},
           {"theory_class", class_to_json(r.theory_class)},
           {"balance", balance_to_json(r.balance)},
           {"normalization_residual", r.normalization_residual}};
    Json lambda{{"point", pair_to_json(r.lambda.value)}};
    if (r.estimate) {
        const LambdaEstimate &e = *r.estimate;
        lambda["ci_low"] = pair_to_json(e.ci_low);
        lambda["ci_high"] = pair_to_json(e.ci_high);
        lambda["stderr"] = pair_to_json(e.stderr);
        lambda["bootstrap"] = Json{{"replicates", e.method.replicates},
                                   {"seed", e.method.seed},
                                   {"confidence", e.method.confidence},
                                   {"failed_replicates", e.failed_replicates}};
    }
    j["lambda"] = lambda;
    if (r.estimated) {
        j["stderr"] = Json{{"prior", pair_to_json(r.estimated->prior_stderr)},
                           {"transition", matrix_to_json(r.estimated->transition_stderr)},
                           {"outcome", pair_to_json(r.estimated->outcome_stderr)}};
    }
    if (r.amplitudes) {
        j["amplitudes"] = Json{{"psi", amplitudes_to_json(*r.amplitudes)}, {"born_residual", *r.born_residual}};
    }
    if (r.phase_constraint) {
        j["phase_constraint"] = Json{{"holds", r.phase_constraint->holds},
                                     {"residual", r.phase_constraint->residual},
                                     {"tolerance", r.phase_tolerance}};
    }
    return j;
}

Json reconstruct(const ExperimentFile &file, const AnalysisOptions &options) {
    const auto *stats = std::get_if<ContextStatistics>(&file.data);
    if (!stats) {
        fail(ErrorKind::InvalidInput, "reconstruct needs an experiment file with exact statistics");
    }
    const LambdaPair lambda = lambda_from_statistics(*stats, options.policy);
    const PhasePair phases = phase_parametrization(lambda);
    const AmplitudePair amps = lift_to_amplitudes(*stats, phases);
    return Json{{"lambda", pair_to_json(lambda.value)},
                {"phases", phases_to_json(phases)},
                {"psi", amplitudes_to_json(amps)},
                {"born_residual", born_residual(amps, stats->outcome.values())},
                {"norm", std::norm(amps.psi[0]) + std::norm(amps.psi[1])}};
}

Json balance(const ExperimentFile &file, const AnalysisOptions &options) {
    const Evaluated ev = evaluate(file, options);
    return Json{{"source", ev.estimated ? "counts" : "exact"},
                {"transition", matrix_to_json(ev.stats.transition.entries())},
                {"balance", balance_to_json(check_double_stochastic(ev.stats.transition.entries(),
                                                                    ev.balance_tolerance))}};
}

std::vector<std::pair<std::string, double>> sweep_axes(const std::string &family) {
    constexpr double pi = std::numbers::pi;
    if (family == "qubit") {
        return {{"alpha", pi / 6}, {"phi", pi / 2}, {"b_rotation", pi / 4}, {"b_phase", 0.0}};
    }
    if (family == "synthetic") {
        return {{"prior1", 0.5}, {"t11", 0.8}, {"t21", 0.2}, {"lambda1", 0.0}};
    }
    if (family == "classical") {
        return {{"seed", 0.0}};
    }
    fail(ErrorKind::InvalidInput, "unknown sweep family '" + family + "' (expected qubit, synthetic or classical)");
}

namespace {

constexpr const char *kSweepColumns =
    "p1,p2,p11,p12,p21,p22,p1a,p2a,lambda1,lambda2,theta1,theta2,class,col_residual_max";

double phase_theta(const Phase &phase) {
    if (const auto *trig = std::get_if<TrigPhase>(&phase)) {
        return trig->theta;
    }
    return std::get<HyperPhase>(phase).theta;
}

double checked_unit(double v, const std::string &axis) {
    if (!(v >= 0.0 && v <= 1.0)) {
        fail(ErrorKind::InvalidInput, "sweep axis '" + axis + "' must stay within [0,1]");
    }
    return v;
}

std::uint64_t checked_seed(double v) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 9007199254740992.0) {
        fail(ErrorKind::InvalidInput, "sweep axis 'seed' must hold nonnegative integers");
    }
    return static_cast<std::uint64_t>(v);
}

// Fields after the parameters: p's, outcome, lambda, theta, class, residual.
std::string sweep_row(const std::string &family, const std::vector<double> &params, const AnalysisOptions &options) {
    std::vector<std::string> cells(14);
    auto put_pairs = [&](const Pair &prior, const Matrix2 &t) {
        cells[0] = format_double(prior[0]);
        cells[1] = format_double(prior[1]);
        cells[2] = format_double(t[0][0]);
        cells[3] = format_double(t[0][1]);
        cells[4] = format_double(t[1][0]);
        cells[5] = format_double(t[1][1]);
        const BalanceReport b = check_double_stochastic(t, options.tolerance);
        cells[13] = format_double(std::max(b.column_residuals[0], b.column_residuals[1]));
    };

    std::optional<ContextStatistics> stats;
    if (family == "qubit") {
        stats = qubit_statistics(QubitModel{params[0], params[1], params[2], params[3]});
    } else if (family == "classical") {
        stats = classical_statistics(std::get<KolmogorovModel>(random_model(ModelKind::Classical, checked_seed(params[0]))));
    } else {
        const double p1 = checked_unit(params[0], "prior1");
        const Pair prior{p1, 1.0 - p1};
        const Matrix2 t{{{checked_unit(params[1], "t11"), 1.0 - params[1]}, {checked_unit(params[2], "t21"), 1.0 - params[2]}}};
        put_pairs(prior, t);
        try {
            const double lambda2 =
                companion_lambda(ProbabilityPair::make(prior), TransitionMatrix::make(t), params[3]);
            stats = synthesize_statistics(SyntheticModel{prior, t, LambdaPair{{params[3], lambda2}}});
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::InfeasibleLambda) {
                cells[12] = "Infeasible";
            } else if (e.kind() == ErrorKind::DegenerateContext) {
                cells[12] = "Degenerate";
            } else {
                throw;
            }
        }
    }

    if (stats) {
        put_pairs(stats->prior.values(), stats->transition.entries());
        cells[6] = format_double(stats->outcome[0]);
        cells[7] = format_double(stats->outcome[1]);
        try {
            const LambdaPair lambda = lambda_from_statistics(*stats, options.policy);
            const PhasePair phases = phase_parametrization(lambda);
            cells[8] = format_double(lambda[0]);
            cells[9] = format_double(lambda[1]);
            cells[10] = format_double(phase_theta(phases[0]));
            cells[11] = format_double(phase_theta(phases[1]));
            cells[12] = verdict_name(classify_theory(lambda, options.eps_class.value_or(kEpsClassExact)).verdict);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateContext) {
                throw;
            }
            cells[12] = "Degenerate";
        }
    }

    std::string line;
    for (std::size_t k = 0; k < params.size(); ++k) {
        line += family == "classical" ? std::to_string(checked_seed(params[k])) : format_double(params[k]);
        line += ",";
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) {
            line += ",";
        }
        line += cells[k];
    }
    return line + "\n";
}

}  // namespace

std::string run_sweep(const SweepSpec &spec, const AnalysisOptions &options) {
    const auto axes = sweep_axes(spec.family);
    for (const auto &[name, values] : spec.axes) {
        const bool known = std::any_of(axes.begin(), axes.end(), [&](const auto &a) { return a.first == name; });
        if (!known) {
            fail(ErrorKind::InvalidInput, "sweep family '" + spec.family + "' has no axis '" + name + "'");
        }
        if (values.empty()) {
            fail(ErrorKind::InvalidInput, "sweep axis '" + name + "' is empty");
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                fail(ErrorKind::InvalidInput, "sweep axis '" + name + "' holds a non-finite value");
            }
        }
    }
    std::vector<std::vector<double>> grid;
    std::string header;
    for (const auto &[name, fallback] : axes) {
        const auto it = spec.axes.find(name);
        grid.push_back(it == spec.axes.end() ? std::vector<double>{fallback} : it->second);
        header += name + ",";
    }
    std::string csv = header + kSweepColumns + "\n";

    // Odometer over the cartesian product, first axis outermost.
    std::vector<std::size_t> index(grid.size(), 0);
    for (;;) {
        std::vector<double> params(grid.size());
        for (std::size_t a = 0; a < grid.size(); ++a) {
            params[a] = grid[a][index[a]];
        }
        csv += sweep_row(spec.family, params, options);
        std::size_t a = grid.size();
        while (a > 0) {
            --a;
            if (++index[a] < grid[a].size()) {
                break;
            }
            index[a] = 0;
            if (a == 0) {
                return csv;
            }
        }
    }
}

}  // namespace ctxprob
