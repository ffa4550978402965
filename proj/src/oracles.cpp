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

#include "ctxprob/oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ctxprob/error.hpp"
#include "ctxprob/rng.hpp"

namespace ctxprob {

KolmogorovModel KolmogorovModel::make(std::vector<ElementaryEvent> points, double tol) {
    if (points.empty()) {
        fail(ErrorKind::InvalidInput, "Kolmogorov model needs at least one elementary event");
    }
    double total = 0.0;
    for (const auto &pt : points) {
        if (!std::isfinite(pt.weight) || pt.weight < 0.0) {
            fail(ErrorKind::InvalidInput, "elementary event weights must be finite and nonnegative");
        }
        if ((pt.a != 0 && pt.a != 1) || (pt.b != 0 && pt.b != 1)) {
            fail(ErrorKind::InvalidInput, "observable values of an elementary event must be outcome 1 or 2");
        }
        total += pt.weight;
    }
    if (std::abs(total - 1.0) > tol) {
        fail(ErrorKind::Inconsistent, "elementary event weights sum to " + std::to_string(total) + ", not 1");
    }
    return KolmogorovModel{std::move(points)};
}

std::string model_family(const Model &model) {
    switch (model.index()) {
        case 0:
            return "classical";
        case 1:
            return "qubit";
        default:
            return "synthetic";
    }
}

ContextStatistics classical_statistics(const KolmogorovModel &model) {
    Matrix2 joint{};  // joint[i][j] = P(B = b_i, A = a_j)
    for (const auto &pt : model.points) {
        joint[pt.b][pt.a] += pt.weight;
    }
    Pair prior{joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
    for (int i = 0; i < 2; ++i) {
        if (prior[i] <= 0.0) {
            fail(ErrorKind::ZeroFiltration, "B = b" + std::to_string(i + 1) + " has zero probability; filtration impossible");
        }
    }
    Matrix2 conditional{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            conditional[i][j] = joint[i][j] / prior[i];
        }
    }
    const double total = prior[0] + prior[1];
    prior = {prior[0] / total, prior[1] / total};
    const Pair outcome{(joint[0][0] + joint[1][0]) / total, (joint[0][1] + joint[1][1]) / total};
    return ContextStatistics::make(prior, conditional, outcome);
}

ContextStatistics qubit_statistics(const QubitModel &m) {
    using C = std::complex<double>;
    const std::array<C, 2> psi{C(std::cos(m.alpha), 0.0), std::polar(std::sin(m.alpha), m.phi)};
    const std::array<std::array<C, 2>, 2> basis{{
        {C(std::cos(m.b_rotation), 0.0), std::polar(std::sin(m.b_rotation), m.b_phase)},
        {-std::polar(std::sin(m.b_rotation), -m.b_phase), C(std::cos(m.b_rotation), 0.0)},
    }};
    Pair prior{};
    Matrix2 transition{};
    for (int i = 0; i < 2; ++i) {
        const C overlap = std::conj(basis[i][0]) * psi[0] + std::conj(basis[i][1]) * psi[1];
        prior[i] = std::norm(overlap);
        for (int j = 0; j < 2; ++j) {
            transition[i][j] = std::norm(basis[i][j]);
        }
    }
    const Pair outcome{std::norm(psi[0]), std::norm(psi[1])};
    return ContextStatistics::make(prior, transition, outcome);
}

ContextStatistics synthesize_statistics(const SyntheticModel &model) {
    const auto prior = ProbabilityPair::make(model.prior);
    const auto transition = TransitionMatrix::make(model.transition);
    Pair outcome{};
    try {
        outcome = predict_outcome(prior, transition, model.target_lambda);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::OutOfRange) {
            fail(ErrorKind::InfeasibleLambda, e.what());
        }
        throw;
    }
    if (std::abs(outcome[0] + outcome[1] - 1.0) > kTolExact) {
        fail(ErrorKind::InfeasibleLambda, "target lambda breaks outcome normalization: outcome sums to " +
                                              std::to_string(outcome[0] + outcome[1]));
    }
    return ContextStatistics{prior, transition, ProbabilityPair::make(outcome)};
}

ContextStatistics exact_statistics(const Model &model) {
    return std::visit(
        [](const auto &m) -> ContextStatistics {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KolmogorovModel>) {
                return classical_statistics(m);
            } else if constexpr (std::is_same_v<T, QubitModel>) {
                return qubit_statistics(m);
            } else {
                return synthesize_statistics(m);
            }
        },
        model);
}

double companion_lambda(const ProbabilityPair &prior, const TransitionMatrix &transition, double lambda1) {
    const Pair w = interference_weights(prior, transition);
    if (w[1] > kTolDegenerate) {
        return -w[0] * lambda1 / w[1];
    }
    if (std::abs(w[0] * lambda1) > kTolDegenerate) {
        fail(ErrorKind::DegenerateContext, "no companion coefficient restores normalization: second weight vanishes");
    }
    return 0.0;
}

namespace {

KolmogorovModel random_kolmogorov(Engine &engine) {
    std::uniform_int_distribution<int> size_dist(2, 16);
    std::uniform_real_distribution<double> weight_dist(0.0, 1.0);
    std::bernoulli_distribution bit;
    for (;;) {
        const int n = size_dist(engine);
        std::vector<ElementaryEvent> points(n);
        double total = 0.0;
        bool has_b[2] = {false, false};
        for (auto &pt : points) {
            // Keep weights strictly positive so every drawn point is a real event.
            pt.weight = weight_dist(engine) + 1e-3;
            pt.a = bit(engine) ? 1 : 0;
            pt.b = bit(engine) ? 1 : 0;
            total += pt.weight;
            has_b[pt.b] = true;
        }
        if (!has_b[0] || !has_b[1]) {
            continue;
        }
        for (auto &pt : points) {
            pt.weight /= total;
        }
        return KolmogorovModel::make(std::move(points));
    }
}

QubitModel random_qubit(Engine &engine) {
    constexpr double pi = std::numbers::pi;
    std::uniform_real_distribution<double> half(0.0, pi / 2);
    std::uniform_real_distribution<double> full(0.0, 2 * pi);
    QubitModel m;
    m.alpha = half(engine);
    m.phi = full(engine);
    m.b_rotation = half(engine);
    m.b_phase = full(engine);
    return m;
}

SyntheticModel random_synthetic(Engine &engine, bool hyperbolic, int max_retries) {
    std::uniform_real_distribution<double> prior_dist(0.05, 0.95);
    std::uniform_real_distribution<double> row_dist(0.02, 0.98);
    std::uniform_real_distribution<double> trig_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> hyper_dist(1.0, 3.0);
    std::bernoulli_distribution sign;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        const double p1 = prior_dist(engine);
        const double t11 = row_dist(engine);
        const double t21 = row_dist(engine);
        double lambda1 = hyperbolic ? hyper_dist(engine) : trig_dist(engine);
        if (hyperbolic && sign(engine)) {
            lambda1 = -lambda1;
        }
        SyntheticModel m{{p1, 1.0 - p1}, Matrix2{{{t11, 1.0 - t11}, {t21, 1.0 - t21}}}, {}};
        const auto prior = ProbabilityPair::make(m.prior);
        const auto transition = TransitionMatrix::make(m.transition);
        const double lambda2 = companion_lambda(prior, transition, lambda1);
        const bool in_regime = hyperbolic ? std::abs(lambda2) > 1.0 : std::abs(lambda2) <= 1.0;
        if (!in_regime) {
            continue;
        }
        m.target_lambda = LambdaPair{{lambda1, lambda2}};
        try {
            synthesize_statistics(m);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::InfeasibleLambda) {
                continue;
            }
            throw;
        }
        return m;
    }
    fail(ErrorKind::GenerationExhausted,
         "no feasible synthetic instance after " + std::to_string(max_retries) + " attempts");
}

}  // namespace

Model random_model(ModelKind kind, std::uint64_t seed, int max_retries) {
    switch (kind) {
        case ModelKind::Classical: {
            Engine engine = make_stream(seed, "random_model/classical");
            return random_kolmogorov(engine);
        }
        case ModelKind::Qubit: {
            Engine engine = make_stream(seed, "random_model/qubit");
            return random_qubit(engine);
        }
        case ModelKind::SyntheticTrigonometric: {
            Engine engine = make_stream(seed, "random_model/synthetic-trigonometric");
            return random_synthetic(engine, false, max_retries);
        }
        case ModelKind::SyntheticHyperbolic: {
            Engine engine = make_stream(seed, "random_model/synthetic-hyperbolic");
            return random_synthetic(engine, true, max_retries);
        }
    }
    fail(ErrorKind::InvalidInput, "unknown model kind");
}

Model preset_model(const std::string &name) {
    constexpr double pi = std::numbers::pi;
    if (name == "e1") {
        return QubitModel{pi / 6, pi / 2, pi / 4, 0.0};
    }
    if (name == "e2") {
        return KolmogorovModel::make({{0.06, 0, 0}, {0.24, 1, 0}, {0.42, 0, 1}, {0.28, 1, 1}});
    }
    if (name == "e3") {
        return SyntheticModel{{0.5, 0.5}, Matrix2{{{0.8, 0.2}, {0.2, 0.8}}}, LambdaPair{{1.25, -1.25}}};
    }
    fail(ErrorKind::InvalidInput, "unknown preset '" + name + "' (expected e1, e2 or e3)");
}

}  // namespace ctxprob
