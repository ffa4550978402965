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

#include "ctxprob/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ctxprob/error.hpp"
#include "ctxprob/rng.hpp"

namespace ctxprob {

namespace {

Tally draw_tally(Engine &engine, std::uint64_t n, double p_first) {
    const std::uint64_t first = draw_binomial(engine, n, p_first);
    return Tally{n, {first, n - first}};
}

Pair frequencies(const Tally &t) {
    const double n = static_cast<double>(t.n);
    return {static_cast<double>(t.counts[0]) / n, static_cast<double>(t.counts[1]) / n};
}

double binomial_stderr(double p, std::uint64_t n) {
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

void check_tally(const Tally &t, const char *what) {
    if (t.counts[0] + t.counts[1] != t.n || t.counts[0] > t.n) {
        fail(ErrorKind::InvalidInput, std::string(what) + " tallies do not sum to the ensemble size");
    }
}

}  // namespace

void CountsRecord::validate() const {
    check_tally(context, "context");
    check_tally(filtration, "filtration");
    check_tally(filtered[0], "filtered[1]");
    check_tally(filtered[1], "filtered[2]");
}

SampleSizes CountsRecord::sizes() const {
    return SampleSizes{context.n, filtration.n, {filtered[0].n, filtered[1].n}};
}

CountsRecord simulate_counts(const ContextStatistics &exact, const SampleSizes &sizes, std::uint64_t seed,
                             unsigned workers) {
    if (sizes.context == 0 || sizes.filtration == 0 || sizes.filtered[0] == 0 || sizes.filtered[1] == 0) {
        fail(ErrorKind::InvalidInput, "every ensemble size must be at least 1");
    }
    CountsRecord record;
    record.seed = seed;
    // Four physically distinct preparations, four independent substreams.
    parallel_for(4, workers, [&](std::size_t k) {
        switch (k) {
            case 0: {
                Engine engine = make_stream(seed, "experiment/context");
                record.context = draw_tally(engine, sizes.context, exact.outcome[0]);
                break;
            }
            case 1: {
                Engine engine = make_stream(seed, "experiment/filtration");
                record.filtration = draw_tally(engine, sizes.filtration, exact.prior[0]);
                break;
            }
            default: {
                const std::size_t i = k - 2;
                Engine engine = make_stream(seed, "experiment/filtered", i);
                record.filtered[i] = draw_tally(engine, sizes.filtered[i], exact.transition(i, 0));
                break;
            }
        }
    });
    return record;
}

CountsRecord simulate_counts(const Model &model, const SampleSizes &sizes, std::uint64_t seed, unsigned workers) {
    return simulate_counts(exact_statistics(model), sizes, seed, workers);
}

EstimatedStatistics estimate_statistics(const CountsRecord &counts) {
    counts.validate();
    const Tally *all[] = {&counts.context, &counts.filtration, &counts.filtered[0], &counts.filtered[1]};
    for (const Tally *t : all) {
        if (t->n == 0) {
            fail(ErrorKind::EmptyEnsemble, "an ensemble of the experiment record is empty");
        }
    }
    const Pair prior = frequencies(counts.filtration);
    const Matrix2 transition{frequencies(counts.filtered[0]), frequencies(counts.filtered[1])};
    const Pair outcome = frequencies(counts.context);
    EstimatedStatistics est{ContextStatistics::make(prior, transition, outcome), {}, {}, {}, counts.sizes()};
    for (int k = 0; k < 2; ++k) {
        est.prior_stderr[k] = binomial_stderr(prior[k], counts.filtration.n);
        est.outcome_stderr[k] = binomial_stderr(outcome[k], counts.context.n);
        for (int i = 0; i < 2; ++i) {
            est.transition_stderr[i][k] = binomial_stderr(transition[i][k], counts.filtered[i].n);
        }
    }
    return est;
}

double sorted_quantile(const std::vector<double> &sorted, double q) {
    if (sorted.empty()) {
        fail(ErrorKind::InvalidInput, "quantile of an empty sample");
    }
    const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

LambdaEstimate estimate_lambda(const EstimatedStatistics &est, const BootstrapSettings &settings,
                               double eps_override) {
    if (settings.replicates == 0) {
        fail(ErrorKind::InvalidInput, "bootstrap needs at least one replicate");
    }
    if (!(settings.confidence > 0.0 && settings.confidence < 1.0)) {
        fail(ErrorKind::InvalidInput, "bootstrap confidence must lie in (0,1)");
    }
    LambdaEstimate out;
    out.method = settings;
    out.lambda_hat = lambda_from_statistics(est.point);

    const ContextStatistics &p = est.point;
    const SampleSizes &n = est.sizes;
    std::vector<std::optional<LambdaPair>> replicate(settings.replicates);
    parallel_for(settings.replicates, settings.workers, [&](std::size_t r) {
        Engine engine = make_stream(settings.seed, "bootstrap", r);
        CountsRecord resampled;
        resampled.filtration = draw_tally(engine, n.filtration, p.prior[0]);
        resampled.context = draw_tally(engine, n.context, p.outcome[0]);
        for (int i = 0; i < 2; ++i) {
            resampled.filtered[i] = draw_tally(engine, n.filtered[i], p.transition(i, 0));
        }
        try {
            replicate[r] = lambda_from_statistics(estimate_statistics(resampled).point);
        } catch (const Error &) {
            replicate[r].reset();
        }
    });

    const double tail = (1.0 - settings.confidence) / 2.0;
    double half_width = 0.0;
    for (int j = 0; j < 2; ++j) {
        std::vector<double> values;
        values.reserve(replicate.size());
        for (const auto &rep : replicate) {
            if (rep) {
                values.push_back((*rep)[j]);
            }
        }
        out.failed_replicates = replicate.size() - values.size();
        const double hat = out.lambda_hat[j];
        if (values.empty()) {
            out.ci_low[j] = out.ci_high[j] = hat;
            continue;
        }
        double mean = 0.0;
        for (double v : values) {
            mean += v;
        }
        mean /= static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) {
            ss += (v - mean) * (v - mean);
        }
        out.stderr[j] = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
        std::sort(values.begin(), values.end());
        // The interval always brackets the point estimate.
        out.ci_low[j] = std::min(sorted_quantile(values, tail), hat);
        out.ci_high[j] = std::max(sorted_quantile(values, 1.0 - tail), hat);
        half_width = std::max(half_width, (out.ci_high[j] - out.ci_low[j]) / 2.0);
    }
    out.classification = classify_theory(out.lambda_hat, eps_override > 0.0 ? eps_override : half_width);
    return out;
}

std::vector<ConvergenceRow> convergence_study(const ContextStatistics &exact, const std::vector<std::uint64_t> &n_grid,
                                              std::size_t seeds_per_size, std::uint64_t base_seed,
                                              unsigned workers) {
    if (n_grid.empty() || seeds_per_size == 0) {
        fail(ErrorKind::InvalidInput, "convergence study needs a nonempty grid and at least one seed");
    }
    const LambdaPair truth = lambda_from_statistics(exact);
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_grid.size());
    for (std::uint64_t n : n_grid) {
        std::vector<std::optional<Pair>> errors(seeds_per_size);
        parallel_for(seeds_per_size, workers, [&](std::size_t s) {
            const std::uint64_t seed = derive_seed(derive_seed(base_seed, "convergence", n), "run", s);
            try {
                const auto est = estimate_statistics(simulate_counts(exact, SampleSizes::uniform(n), seed));
                const LambdaPair hat = lambda_from_statistics(est.point);
                errors[s] = Pair{std::abs(hat[0] - truth[0]), std::abs(hat[1] - truth[1])};
            } catch (const Error &) {
                errors[s].reset();
            }
        });
        ConvergenceRow row;
        row.n = n;
        for (int j = 0; j < 2; ++j) {
            double sum = 0.0;
            double sum_sq = 0.0;
            std::size_t m = 0;
            for (const auto &e : errors) {
                if (e) {
                    sum += (*e)[j];
                    sum_sq += (*e)[j] * (*e)[j];
                    ++m;
                }
            }
            row.runs = m;
            row.failures = seeds_per_size - m;
            if (m == 0) {
                continue;
            }
            const double mean = sum / static_cast<double>(m);
            row.mean_abs_error[j] = mean;
            if (m > 1) {
                const double var = std::max(0.0, (sum_sq - m * mean * mean) / static_cast<double>(m - 1));
                row.stderr[j] = std::sqrt(var / static_cast<double>(m));
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ctxprob
