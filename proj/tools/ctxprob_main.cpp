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

// Command-line front end. Talks to the library exclusively through the C
// interface in ctxprob/ctxprob.h; the library status is the exit code.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctxprob/ctxprob.h"

namespace {

struct GlobalFlags {
    std::optional<double> tolerance;
    std::optional<double> eps_class;
    std::optional<std::uint64_t> bootstrap_replicates;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    bool strict_degeneracy = false;
    std::string output;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

int report_failure(ctxprob_status status) {
    std::cerr << "error: " << ctxprob_last_error_message() << "\n";
    return static_cast<int>(status);
}

int emit(const std::string &output, const ctxprob_text *text) {
    if (output.empty() || output == "-") {
        std::fwrite(ctxprob_text_data(text), 1, ctxprob_text_size(text), stdout);
        return 0;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return CTXPROB_INVALID_INPUT;
    }
    out.write(ctxprob_text_data(text), static_cast<std::streamsize>(ctxprob_text_size(text)));
    return out ? 0 : static_cast<int>(CTXPROB_INVALID_INPUT);
}

double parse_double(const std::string &s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw UsageError("not a number: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

std::vector<double> parse_list(const std::string &s, std::size_t expected, const char *flag) {
    std::vector<double> values;
    for (const auto &part : split(s, ',')) {
        values.push_back(parse_double(part));
    }
    if (expected && values.size() != expected) {
        throw UsageError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated values");
    }
    return values;
}

// "v1,v2,..." or "start:stop:count" (inclusive, evenly spaced).
std::vector<double> parse_grid(const std::string &s) {
    const auto parts = split(s, ':');
    if (parts.size() == 1) {
        return parse_list(s, 0, "grid");
    }
    if (parts.size() != 3) {
        throw UsageError("grid '" + s + "' must be a list or start:stop:count");
    }
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double count_d = parse_double(parts[2]);
    if (count_d < 0 || count_d != static_cast<double>(static_cast<long long>(count_d))) {
        throw UsageError("grid count must be a nonnegative integer");
    }
    const auto count = static_cast<std::size_t>(count_d);
    std::vector<double> values;
    for (std::size_t k = 0; k < count; ++k) {
        values.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1));
    }
    return values;
}

struct Options {
    ctxprob_options *handle = nullptr;
    ~Options() {
        ctxprob_options_free(handle);
    }
};

ctxprob_status build_options(const GlobalFlags &flags, Options &opts) {
    ctxprob_status st = ctxprob_options_new(&opts.handle);
    if (st == CTXPROB_OK && flags.tolerance) {
        st = ctxprob_options_set_tolerance(opts.handle, *flags.tolerance);
    }
    if (st == CTXPROB_OK && flags.eps_class) {
        st = ctxprob_options_set_eps_class(opts.handle, *flags.eps_class);
    }
    if (st == CTXPROB_OK && flags.bootstrap_replicates) {
        st = ctxprob_options_set_bootstrap_replicates(opts.handle, *flags.bootstrap_replicates);
    }
    if (st == CTXPROB_OK && flags.seed) {
        st = ctxprob_options_set_seed(opts.handle, *flags.seed);
    }
    if (st == CTXPROB_OK) {
        st = ctxprob_options_set_workers(opts.handle, flags.threads);
    }
    if (st == CTXPROB_OK) {
        st = ctxprob_options_set_strict_degeneracy(opts.handle, flags.strict_degeneracy ? 1 : 0);
    }
    return st;
}

using ReportFn = ctxprob_status (*)(const ctxprob_experiment *, const ctxprob_options *, ctxprob_text **);

int run_report(const GlobalFlags &flags, const std::string &input, ReportFn fn) {
    Options opts;
    if (ctxprob_status st = build_options(flags, opts); st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_experiment *experiment = nullptr;
    if (ctxprob_status st = ctxprob_experiment_load(input.c_str(), &experiment); st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_text *report = nullptr;
    const ctxprob_status st = fn(experiment, opts.handle, &report);
    ctxprob_experiment_free(experiment);
    if (st != CTXPROB_OK) {
        return report_failure(st);
    }
    const int rc = emit(flags.output, report);
    ctxprob_text_free(report);
    return rc;
}

struct SimulateFlags {
    std::string model;
    std::string preset;
    double alpha = 0.0, phi = 0.0, b_rotation = 0.0, b_phase = 0.0;
    std::string weights, a_values, b_values;
    std::string prior, transition, lambda;
    std::optional<std::uint64_t> random_seed;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> n_context, n_filtration, n_filtered1, n_filtered2;
};

ctxprob_status make_model(const SimulateFlags &f, ctxprob_model **model) {
    if (!f.preset.empty()) {
        static const std::map<std::string, std::string> family{{"e1", "qubit"}, {"e2", "classical"}, {"e3", "synthetic"}};
        const auto it = family.find(f.preset);
        if (it != family.end() && !f.model.empty() && f.model != it->second) {
            throw UsageError("preset " + f.preset + " belongs to the " + it->second + " family");
        }
        return ctxprob_model_preset(f.preset.c_str(), model);
    }
    if (f.random_seed) {
        static const std::map<std::string, ctxprob_model_kind> kinds{
            {"classical", CTXPROB_MODEL_CLASSICAL},
            {"qubit", CTXPROB_MODEL_QUBIT},
            {"synthetic", CTXPROB_MODEL_SYNTHETIC_TRIGONOMETRIC},
            {"synthetic-hyperbolic", CTXPROB_MODEL_SYNTHETIC_HYPERBOLIC}};
        const auto it = kinds.find(f.model);
        if (it == kinds.end()) {
            throw UsageError("--random-model needs --model classical|qubit|synthetic|synthetic-hyperbolic");
        }
        return ctxprob_model_random(it->second, *f.random_seed, model);
    }
    if (f.model == "qubit") {
        return ctxprob_model_qubit(f.alpha, f.phi, f.b_rotation, f.b_phase, model);
    }
    if (f.model == "classical") {
        const auto w = parse_list(f.weights, 0, "--weights");
        const auto a = parse_list(f.a_values, w.size(), "--a-values");
        const auto b = parse_list(f.b_values, w.size(), "--b-values");
        std::vector<int> ai(a.begin(), a.end());
        std::vector<int> bi(b.begin(), b.end());
        return ctxprob_model_classical(w.data(), ai.data(), bi.data(), w.size(), model);
    }
    if (f.model == "synthetic") {
        const auto p = parse_list(f.prior, 2, "--prior");
        const auto t = parse_list(f.transition, 4, "--transition");
        const auto l = parse_list(f.lambda, 2, "--lambda");
        const double prior[2] = {p[0], p[1]};
        const double transition[2][2] = {{t[0], t[1]}, {t[2], t[3]}};
        const double lambda[2] = {l[0], l[1]};
        return ctxprob_model_synthetic(prior, transition, lambda, model);
    }
    throw UsageError("--model must be qubit, classical or synthetic (or give --preset)");
}

int run_simulate(const GlobalFlags &flags, const SimulateFlags &f) {
    if (f.n == 0 && !(f.n_context && f.n_filtration && f.n_filtered1 && f.n_filtered2)) {
        throw UsageError("give --n or all four per-experiment sizes");
    }
    Options opts;
    if (ctxprob_status st = build_options(flags, opts); st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_model *model = nullptr;
    if (ctxprob_status st = make_model(f, &model); st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_statistics exact;
    if (ctxprob_status st = ctxprob_model_statistics(model, &exact); st != CTXPROB_OK) {
        ctxprob_model_free(model);
        return report_failure(st);
    }
    const ctxprob_sample_sizes sizes{f.n_context.value_or(f.n), f.n_filtration.value_or(f.n),
                                     {f.n_filtered1.value_or(f.n), f.n_filtered2.value_or(f.n)}};
    ctxprob_experiment *experiment = nullptr;
    ctxprob_status st = ctxprob_simulate(model, &sizes, flags.seed.value_or(0), opts.handle, &experiment);
    ctxprob_model_free(model);
    if (st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_text *json = nullptr;
    st = ctxprob_experiment_to_json(experiment, &json);
    ctxprob_experiment_free(experiment);
    if (st != CTXPROB_OK) {
        return report_failure(st);
    }
    const int rc = emit(flags.output, json);
    ctxprob_text_free(json);
    return rc;
}

int run_sweep(const GlobalFlags &flags, const std::string &family, const std::map<std::string, std::string> &axes) {
    Options opts;
    if (ctxprob_status st = build_options(flags, opts); st != CTXPROB_OK) {
        return report_failure(st);
    }
    ctxprob_sweep *sweep = nullptr;
    if (ctxprob_status st = ctxprob_sweep_new(family.c_str(), &sweep); st != CTXPROB_OK) {
        return report_failure(st);
    }
    for (const auto &[axis, spec] : axes) {
        const auto values = parse_grid(spec);
        if (ctxprob_status st = ctxprob_sweep_set_axis(sweep, axis.c_str(), values.data(), values.size());
            st != CTXPROB_OK) {
            ctxprob_sweep_free(sweep);
            return report_failure(st);
        }
    }
    ctxprob_text *csv = nullptr;
    const ctxprob_status st = ctxprob_sweep_run(sweep, opts.handle, &csv);
    ctxprob_sweep_free(sweep);
    if (st != CTXPROB_OK) {
        return report_failure(st);
    }
    const int rc = emit(flags.output, csv);
    ctxprob_text_free(csv);
    return rc;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Contextual probability calculus: transition coefficients, balance checks, amplitude lifts "
                 "and Monte-Carlo simulation"};
    app.set_version_flag("--version", ctxprob_version());
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--tolerance", flags.tolerance, "Tolerance for normalization and balance checks");
    app.add_option("--eps-class", flags.eps_class, "Classification band around |lambda| = 0 and 1");
    app.add_option("--bootstrap-replicates", flags.bootstrap_replicates, "Bootstrap replicates for counts input");
    app.add_option("--seed", flags.seed, "Seed for simulation and bootstrap");
    app.add_option("--output,-o", flags.output, "Output path (stdout when omitted)");
    app.add_option("--threads", flags.threads, "Worker threads; results do not depend on it")->check(CLI::Range(1u, 1024u));
    app.add_flag("--strict-degeneracy", flags.strict_degeneracy, "Treat 0/0 coefficients as degenerate errors");

    std::string input;
    auto *analyze = app.add_subcommand("analyze", "Full analysis report of an experiment file");
    analyze->add_option("input", input, "Experiment JSON file")->required();
    auto *reconstruct = app.add_subcommand("reconstruct", "Complex amplitudes of an exact experiment file");
    reconstruct->add_option("input", input, "Experiment JSON file")->required();
    auto *balance = app.add_subcommand("balance", "Row and column stochasticity checks");
    balance->add_option("input", input, "Experiment JSON file")->required();

    SimulateFlags sim;
    auto *simulate = app.add_subcommand("simulate", "Simulate finite ensembles from an oracle model");
    simulate->add_option("--model", sim.model, "qubit, classical, synthetic (or synthetic-hyperbolic with --random-model)");
    simulate->add_option("--preset", sim.preset, "Named model: e1, e2 or e3");
    simulate->add_option("--alpha", sim.alpha, "Qubit state mixing angle (radians)");
    simulate->add_option("--phi", sim.phi, "Qubit relative phase (radians)");
    simulate->add_option("--b-rotation", sim.b_rotation, "B-basis rotation (radians)");
    simulate->add_option("--b-phase", sim.b_phase, "B-basis relative phase (radians)");
    simulate->add_option("--weights", sim.weights, "Classical point weights, comma-separated");
    simulate->add_option("--a-values", sim.a_values, "Classical A-outcome (1 or 2) per point");
    simulate->add_option("--b-values", sim.b_values, "Classical B-outcome (1 or 2) per point");
    simulate->add_option("--prior", sim.prior, "Synthetic prior p1,p2");
    simulate->add_option("--transition", sim.transition, "Synthetic transition p11,p12,p21,p22");
    simulate->add_option("--lambda", sim.lambda, "Synthetic target lambda1,lambda2");
    simulate->add_option("--random-model", sim.random_seed, "Draw a random model of the given family from this seed");
    simulate->add_option("--n", sim.n, "Ensemble size of every experiment");
    simulate->add_option("--n-context", sim.n_context, "Size of the A-on-S ensemble");
    simulate->add_option("--n-filtration", sim.n_filtration, "Size of the B-on-S ensemble");
    simulate->add_option("--n-filtered1", sim.n_filtered1, "Size of the A-on-S_1 ensemble");
    simulate->add_option("--n-filtered2", sim.n_filtered2, "Size of the A-on-S_2 ensemble");

    std::string sweep_family;
    std::map<std::string, std::string> axes{{"alpha", ""},  {"phi", ""}, {"b_rotation", ""}, {"b_phase", ""},
                                            {"prior1", ""}, {"t11", ""}, {"t21", ""},        {"lambda1", ""},
                                            {"seed", ""}};
    auto *sweep = app.add_subcommand("sweep", "Tabulate a model family over a parameter grid as CSV");
    sweep->add_option("--model", sweep_family, "qubit, synthetic or classical")->required();
    const char *grid_help = "Grid: v1,v2,... or start:stop:count";
    std::map<std::string, CLI::Option *> axis_options;
    for (const auto &[axis, flag] : std::vector<std::pair<std::string, std::string>>{{"alpha", "--alpha"},
                                                                                   {"phi", "--phi"},
                                                                                   {"b_rotation", "--b-rotation"},
                                                                                   {"b_phase", "--b-phase"},
                                                                                   {"prior1", "--prior1"},
                                                                                   {"t11", "--t11"},
                                                                                   {"t21", "--t21"},
                                                                                   {"lambda1", "--lambda1"},
                                                                                   {"seed", "--seeds"}}) {
        axis_options[axis] = sweep->add_option(flag, axes[axis], grid_help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return CTXPROB_INVALID_INPUT;
    }

    try {
        if (*analyze) {
            return run_report(flags, input, ctxprob_analyze);
        }
        if (*reconstruct) {
            return run_report(flags, input, ctxprob_reconstruct);
        }
        if (*balance) {
            return run_report(flags, input, ctxprob_balance);
        }
        if (*simulate) {
            return run_simulate(flags, sim);
        }
        if (*sweep) {
            std::map<std::string, std::string> given;
            for (const auto &[axis, option] : axis_options) {
                if (option->count() > 0) {
                    given[axis] = axes[axis];
                }
            }
            return run_sweep(flags, sweep_family, given);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return CTXPROB_INVALID_INPUT;
    }
    return CTXPROB_INVALID_INPUT;
}
