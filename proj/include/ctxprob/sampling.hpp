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

#ifndef CTXPROB_SAMPLING_HPP
#define CTXPROB_SAMPLING_HPP

// Finite-ensemble simulation of the three contextual experiments
// (A on S, B on S, A on each filtered context S_i^b), frequency estimation,
// bootstrap inference for lambda, and convergence studies.

#include <array>
#include <cstdint>
#include <vector>

#include "ctxprob/calculus.hpp"
#include "ctxprob/oracles.hpp"

namespace ctxprob {

struct SampleSizes {
    std::uint64_t context = 0;
    std::uint64_t filtration = 0;
    std::array<std::uint64_t, 2> filtered{};

    static SampleSizes uniform(std::uint64_t n) {
        return SampleSizes{n, n, {n, n}};
    }
    bool operator==(const SampleSizes &) const = default;
};

/// Outcome tallies of one ensemble of size n.
struct Tally {
    std::uint64_t n = 0;
    std::array<std::uint64_t, 2> counts{};
    bool operator==(const Tally &) const = default;
};

struct CountsRecord {
    Tally context;                // A measured on S
    Tally filtration;             // B measured on S
    std::array<Tally, 2> filtered;  // A measured on S_i^b
    std::uint64_t seed = 0;

    /// Throws InvalidInput unless every tally pair sums to its ensemble size.
    void validate() const;
    SampleSizes sizes() const;
    bool operator==(const CountsRecord &) const = default;
};

struct EstimatedStatistics {
    ContextStatistics point;
    Pair prior_stderr{};
    Matrix2 transition_stderr{};
    Pair outcome_stderr{};
    SampleSizes sizes;
};

struct BootstrapSettings {
    std::size_t replicates = 1000;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    unsigned workers = 1;
};

struct LambdaEstimate {
    LambdaPair lambda_hat;
    Pair ci_low{};
    Pair ci_high{};
    Pair stderr{};  // standard deviation of the bootstrap replicates
    BootstrapSettings method;
    std::size_t failed_replicates = 0;
    TheoryClass classification;
};

/// Tallies drawn from the exact probabilities, one independent substream per
/// experiment. A pure function of (stats, sizes, seed); `workers` only changes
/// how the work is scheduled.
CountsRecord simulate_counts(const ContextStatistics &exact, const SampleSizes &sizes, std::uint64_t seed,
                             unsigned workers = 1);
CountsRecord simulate_counts(const Model &model, const SampleSizes &sizes, std::uint64_t seed,
                             unsigned workers = 1);

/// Relative frequencies with binomial standard errors sqrt(p(1-p)/n).
/// Throws EmptyEnsemble when some ensemble is empty.
EstimatedStatistics estimate_statistics(const CountsRecord &counts);

/// Point estimate plus percentile-bootstrap intervals. Each replicate redraws
/// every tally from its estimated probability on its own substream. Replicates
/// whose lambda is undefined are counted in failed_replicates. The verdict uses
/// eps_class = max component half-width unless eps_override > 0.
LambdaEstimate estimate_lambda(const EstimatedStatistics &est, const BootstrapSettings &settings,
                               double eps_override = 0.0);

struct ConvergenceRow {
    std::uint64_t n = 0;
    Pair mean_abs_error{};
    Pair stderr{};  // standard error of the mean absolute error
    std::size_t runs = 0;
    std::size_t failures = 0;
};

/// For every n in the grid, `seeds_per_size` independent simulations at n per
/// experiment and the mean |lambda_hat - lambda_true| per component.
std::vector<ConvergenceRow> convergence_study(const ContextStatistics &exact, const std::vector<std::uint64_t> &n_grid,
                                              std::size_t seeds_per_size, std::uint64_t base_seed,
                                              unsigned workers = 1);

/// Linear-interpolation quantile of an ascending-sorted sample.
double sorted_quantile(const std::vector<double> &sorted, double q);

}  // namespace ctxprob

#endif
