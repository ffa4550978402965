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

#include "ctxprob/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

bool in_unit_interval(double x, double tol) {
    return std::isfinite(x) && x >= -tol && x <= 1.0 + tol;
}

std::string describe(const Pair &p) {
    std::ostringstream out;
    out.precision(17);
    out << "(" << p[0] << ", " << p[1] << ")";
    return out.str();
}

// Products of probabilities can come out a hair below zero when an input sits
// at -tol; the square root must still be real.
double safe_sqrt(double x) {
    return std::sqrt(std::max(0.0, x));
}

}  // namespace

DichotomicObservable DichotomicObservable::make(std::string name, std::string first,
                                                std::string second) {
    if (name.empty()) {
        fail(ErrorKind::InvalidInput, "observable name must be nonempty");
    }
    if (first == second) {
        fail(ErrorKind::InvalidInput, "observable '" + name + "' has duplicate value label '" + first + "'");
    }
    return DichotomicObservable{std::move(name), {std::move(first), std::move(second)}};
}

DichotomicObservable DichotomicObservable::default_a() {
    return make("A", "a1", "a2");
}

DichotomicObservable DichotomicObservable::default_b() {
    return make("B", "b1", "b2");
}

ProbabilityPair ProbabilityPair::make(Pair values, double tol) {
    for (double v : values) {
        if (!in_unit_interval(v, tol)) {
            fail(ErrorKind::Inconsistent, "probability outside [0,1]: " + describe(values));
        }
    }
    if (std::abs(values[0] + values[1] - 1.0) > tol) {
        fail(ErrorKind::Inconsistent, "probability pair does not sum to 1: " + describe(values));
    }
    return ProbabilityPair(values);
}

TransitionMatrix TransitionMatrix::from_rows(Pair row1, Pair row2, double tol) {
    return make(Matrix2{row1, row2}, tol);
}

TransitionMatrix TransitionMatrix::make(const Matrix2 &entries, double tol) {
    for (const auto &row : entries) {
        for (double v : row) {
            if (!in_unit_interval(v, tol)) {
                fail(ErrorKind::Inconsistent, "transition entry outside [0,1]: " + describe(row));
            }
        }
        if (std::abs(row[0] + row[1] - 1.0) > tol) {
            fail(ErrorKind::Inconsistent, "transition row does not sum to 1: " + describe(row));
        }
    }
    return TransitionMatrix(entries);
}

ContextStatistics ContextStatistics::make(Pair prior, const Matrix2 &transition, Pair outcome,
                                          double tol) {
    return ContextStatistics{ProbabilityPair::make(prior, tol), TransitionMatrix::make(transition, tol),
                             ProbabilityPair::make(outcome, tol)};
}

double phase_coefficient(const Phase &phase) {
    if (const auto *trig = std::get_if<TrigPhase>(&phase)) {
        return std::cos(trig->theta);
    }
    const auto &hyper = std::get<HyperPhase>(phase);
    return hyper.sign * std::cosh(hyper.theta);
}

bool is_trigonometric(const PhasePair &phases) {
    return std::holds_alternative<TrigPhase>(phases[0]) && std::holds_alternative<TrigPhase>(phases[1]);
}

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Classical:
            return "Classical";
        case Verdict::Trigonometric:
            return "Trigonometric";
        case Verdict::Hyperbolic:
            return "Hyperbolic";
        case Verdict::HyperTrigonometric:
            return "HyperTrigonometric";
        case Verdict::Boundary:
            return "Boundary";
    }
    return "Unknown";
}

Pair interference_weights(const ProbabilityPair &prior, const TransitionMatrix &transition) {
    Pair w{};
    for (std::size_t j = 0; j < 2; ++j) {
        w[j] = safe_sqrt(prior[0] * prior[1] * transition(0, j) * transition(1, j));
    }
    return w;
}

Pair total_probability(const ProbabilityPair &prior, const TransitionMatrix &transition) {
    Pair out{};
    for (std::size_t j = 0; j < 2; ++j) {
        out[j] = prior[0] * transition(0, j) + prior[1] * transition(1, j);
    }
    return out;
}

Pair predict_outcome(const ProbabilityPair &prior, const TransitionMatrix &transition,
                     const LambdaPair &lambda, double tol) {
    for (double l : lambda.value) {
        if (!std::isfinite(l)) {
            fail(ErrorKind::InvalidInput, "context-transition coefficient must be finite");
        }
    }
    // Evaluated as classical + interference so that lambda = 0 reproduces
    // total_probability bit for bit.
    const Pair classical = total_probability(prior, transition);
    const Pair w = interference_weights(prior, transition);
    Pair out{};
    for (std::size_t j = 0; j < 2; ++j) {
        out[j] = classical[j] + 2.0 * w[j] * lambda[j];
    }
    for (double p : out) {
        if (!in_unit_interval(p, tol)) {
            fail(ErrorKind::OutOfRange, "predicted outcome probabilities " + describe(out) + " leave [0,1]");
        }
    }
    return out;
}

LambdaPair lambda_from_statistics(const ContextStatistics &stats, DegeneracyPolicy policy,
                                  double tol_degenerate) {
    const Pair classical = total_probability(stats.prior, stats.transition);
    const Pair w = interference_weights(stats.prior, stats.transition);
    LambdaPair lambda;
    for (std::size_t j = 0; j < 2; ++j) {
        const double numerator = stats.outcome[j] - classical[j];
        const double denominator = 2.0 * w[j];
        if (denominator > tol_degenerate) {
            lambda.value[j] = numerator / denominator;
            continue;
        }
        if (std::abs(numerator) > tol_degenerate || policy == DegeneracyPolicy::Fail) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "degenerate context for outcome " << (j + 1) << ": interference weight " << denominator
                << " vanishes while the deviation from total probability is " << numerator;
            fail(ErrorKind::DegenerateContext, msg.str());
        }
        lambda.value[j] = 0.0;
    }
    return lambda;
}

TheoryClass classify_theory(const LambdaPair &lambda, double eps_class) {
    TheoryClass result;
    result.eps_class = eps_class;
    const double a0 = std::abs(lambda[0]);
    const double a1 = std::abs(lambda[1]);
    const auto below = [&](double a) { return a <= 1.0 - eps_class; };
    const auto above = [&](double a) { return a >= 1.0 + eps_class; };

    if (std::max(a0, a1) <= eps_class) {
        result.verdict = Verdict::Classical;
    } else if (below(a0) && below(a1)) {
        result.verdict = Verdict::Trigonometric;
    } else if (above(a0) && above(a1)) {
        result.verdict = Verdict::Hyperbolic;
    } else if (below(a0) && above(a1)) {
        result.verdict = Verdict::HyperTrigonometric;
        result.components = {1};
    } else if (above(a0) && below(a1)) {
        result.verdict = Verdict::HyperTrigonometric;
        result.components = {0};
    } else {
        result.verdict = Verdict::Boundary;
        for (int j = 0; j < 2; ++j) {
            if (std::abs(std::abs(lambda[j]) - 1.0) < eps_class) {
                result.components.push_back(j);
            }
        }
    }
    return result;
}

namespace {

void require_unit_entries(const Matrix2 &entries) {
    for (const auto &row : entries) {
        for (double v : row) {
            if (!(v >= 0.0 && v <= 1.0)) {
                fail(ErrorKind::Inconsistent, "matrix entry outside [0,1]: " + describe(row));
            }
        }
    }
}

}  // namespace

BalanceReport check_row_stochastic(const Matrix2 &entries, double tol) {
    require_unit_entries(entries);
    BalanceReport report;
    report.tolerance = tol;
    for (std::size_t i = 0; i < 2; ++i) {
        report.row_residuals[i] = std::abs(entries[i][0] + entries[i][1] - 1.0);
    }
    report.is_stochastic = report.row_residuals[0] <= tol && report.row_residuals[1] <= tol;
    return report;
}

BalanceReport check_double_stochastic(const Matrix2 &entries, double tol) {
    BalanceReport report = check_row_stochastic(entries, tol);
    for (std::size_t j = 0; j < 2; ++j) {
        report.column_residuals[j] = std::abs(entries[0][j] + entries[1][j] - 1.0);
    }
    report.columns_checked = true;
    report.is_double_stochastic =
        report.is_stochastic && report.column_residuals[0] <= tol && report.column_residuals[1] <= tol;
    return report;
}

PhasePair phase_parametrization(const LambdaPair &lambda) {
    auto one = [](double l) -> Phase {
        if (std::abs(l) <= 1.0) {
            return TrigPhase{std::acos(l)};
        }
        return HyperPhase{l > 0 ? 1 : -1, std::acosh(std::abs(l))};
    };
    return {one(lambda[0]), one(lambda[1])};
}

double normalization_residual(const ContextStatistics &stats, const LambdaPair &lambda) {
    const Pair w = interference_weights(stats.prior, stats.transition);
    return w[0] * lambda[0] + w[1] * lambda[1];
}

}  // namespace ctxprob
