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

#ifndef CTXPROB_ANALYSIS_HPP
#define CTXPROB_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxprob/calculus.hpp"
#include "ctxprob/hilbert.hpp"
#include "ctxprob/io.hpp"
#include "ctxprob/sampling.hpp"

namespace ctxprob {

struct AnalysisOptions {
    double tolerance = kTolExact;
    std::optional<double> eps_class;
    std::size_t bootstrap_replicates = 1000;
    double confidence = 0.95;
    // Bootstrap seed; the record's own seed when absent.
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    DegeneracyPolicy policy = DegeneracyPolicy::ZeroLambda;
};

struct AnalysisReport {
    DichotomicObservable observable_a;
    DichotomicObservable observable_b;
    ContextStatistics statistics;
    std::optional<EstimatedStatistics> estimated;
    LambdaPair lambda;
    std::optional<LambdaEstimate> estimate;
    PhasePair phases;
    TheoryClass theory_class;
    BalanceReport balance;
    double normalization_residual = 0.0;
    // Present exactly when the verdict is Classical or Trigonometric.
    std::optional<AmplitudePair> amplitudes;
    std::optional<double> born_residual;
    std::optional<PhaseConstraint> phase_constraint;
    double phase_tolerance = kTolExact;
};

AnalysisReport analyze(const ExperimentFile &file, const AnalysisOptions &options);
Json report_to_json(const AnalysisReport &report);

/// Amplitude lift of an exact file. Throws InvalidInput for counts files and
/// NonTrigonometric when either coefficient exceeds 1 in magnitude.
Json reconstruct(const ExperimentFile &file, const AnalysisOptions &options);

/// Stochasticity and balance checks only.
Json balance(const ExperimentFile &file, const AnalysisOptions &options);

struct SweepSpec {
    std::string family;  // qubit, synthetic, classical
    std::map<std::string, std::vector<double>> axes;
};

/// Axis names and their defaults per family, in CSV column order.
std::vector<std::pair<std::string, double>> sweep_axes(const std::string &family);

/// CSV with one row per grid point (cartesian product of the axes).
std::string run_sweep(const SweepSpec &spec, const AnalysisOptions &options);

}  // namespace ctxprob

#endif
