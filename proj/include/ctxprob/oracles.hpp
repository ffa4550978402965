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

#ifndef CTXPROB_ORACLES_HPP
#define CTXPROB_ORACLES_HPP

// Ground-truth model families that produce ContextStatistics independently
// of the calculus: a finite Kolmogorov space (classical), a qubit under the
// Born rule (quantum), and lambda-targeted synthetic instances.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ctxprob/calculus.hpp"

namespace ctxprob {

struct ElementaryEvent {
    double weight = 0.0;
    int a = 0;  // A-outcome index, 0 or 1
    int b = 0;  // B-outcome index, 0 or 1
    bool operator==(const ElementaryEvent &) const = default;
};

/// Finite probability space with random variables A(omega), B(omega).
struct KolmogorovModel {
    std::vector<ElementaryEvent> points;

    /// Weights nonnegative and summing to 1 within tol; outcome indices in {0,1}.
    static KolmogorovModel make(std::vector<ElementaryEvent> points, double tol = kTolExact);
    bool operator==(const KolmogorovModel &) const = default;
};

/// State cos(alpha)|a1> + e^{i phi} sin(alpha)|a2>; B-basis
/// |b1> = cos(beta)|a1> + e^{i chi} sin(beta)|a2>,
/// |b2> = -e^{-i chi} sin(beta)|a1> + cos(beta)|a2>,
/// with beta = b_rotation and chi = b_phase.
struct QubitModel {
    double alpha = 0.0;
    double phi = 0.0;
    double b_rotation = 0.0;
    double b_phase = 0.0;
    bool operator==(const QubitModel &) const = default;
};

struct SyntheticModel {
    Pair prior{};
    Matrix2 transition{};
    LambdaPair target_lambda;
    bool operator==(const SyntheticModel &) const = default;
};

using Model = std::variant<KolmogorovModel, QubitModel, SyntheticModel>;

enum class ModelKind { Classical, Qubit, SyntheticTrigonometric, SyntheticHyperbolic };

std::string model_family(const Model &model);

/// Bayes conditioning on the finite space. Throws ZeroFiltration when some
/// B-outcome carries no weight.
ContextStatistics classical_statistics(const KolmogorovModel &model);

/// Born-rule probabilities p_j^a = |<a_j|psi>|^2, p_i = |<b_i|psi>|^2,
/// p_ij = |<a_j|b_i>|^2.
ContextStatistics qubit_statistics(const QubitModel &model);

/// outcome := predict_outcome(prior, transition, target_lambda). Throws
/// InfeasibleLambda when that outcome is not a probability pair.
ContextStatistics synthesize_statistics(const SyntheticModel &model);

ContextStatistics exact_statistics(const Model &model);

/// The lambda_2 that keeps outcome normalization for a given lambda_1, or
/// lambda_1 itself scaled when the second interference weight vanishes.
/// Throws DegenerateContext when w_2 = 0 but w_1 lambda_1 != 0.
double companion_lambda(const ProbabilityPair &prior, const TransitionMatrix &transition, double lambda1);

/// Deterministic function of (kind, seed).
/// Classical: 1..16 points with renormalized uniform weights, both B-outcomes
/// present. Qubit: angles uniform on [0, pi/2] x [0, 2pi) x [0, pi/2] x [0, 2pi).
/// Synthetic: rejection sampling toward the requested regime; throws
/// GenerationExhausted after `max_retries` rejections.
Model random_model(ModelKind kind, std::uint64_t seed, int max_retries = 10000);

/// Named instances used throughout the tests and the CLI: "e1" (qubit,
/// lambda = (0.5, -0.5)), "e2" (4-point classical space), "e3" (synthetic
/// hyperbolic, lambda = (1.25, -1.25)).
Model preset_model(const std::string &name);

}  // namespace ctxprob

#endif
