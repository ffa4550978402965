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

#ifndef CTXPROB_CALCULUS_HPP
#define CTXPROB_CALCULUS_HPP

// Exact (floating-point, no sampling) calculus of context transitions for a
// pair of dichotomic observables A and B: the generalized total-probability
// transformation, its inversion into context-transition coefficients, the
// classification of those coefficients, and stochasticity checks.
//
// Indexing convention throughout: i = 0,1 is the B-outcome of a filtered
// context, j = 0,1 is the A-outcome.

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace ctxprob {

inline constexpr double kTolExact = 1e-9;
inline constexpr double kTolDegenerate = 1e-12;
inline constexpr double kEpsClassExact = 1e-6;

using Pair = std::array<double, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

struct DichotomicObservable {
    std::string name;
    std::array<std::string, 2> labels;

    /// Throws InvalidInput unless the name is nonempty and labels are distinct.
    static DichotomicObservable make(std::string name, std::string first, std::string second);
    static DichotomicObservable default_a();
    static DichotomicObservable default_b();

    bool operator==(const DichotomicObservable &) const = default;
};

/// Two probabilities of complementary events: each in [0,1], summing to 1.
class ProbabilityPair {
  public:
    static ProbabilityPair make(Pair values, double tol = kTolExact);

    double operator[](std::size_t j) const {
        return p_[j];
    }
    const Pair &values() const {
        return p_;
    }
    bool operator==(const ProbabilityPair &) const = default;

  private:
    explicit ProbabilityPair(Pair p) : p_(p) {
    }
    Pair p_;
};

/// Row-stochastic 2x2 matrix p_ij = P_{S_i^b}(A = a_j).
class TransitionMatrix {
  public:
    static TransitionMatrix from_rows(Pair row1, Pair row2, double tol = kTolExact);
    static TransitionMatrix make(const Matrix2 &entries, double tol = kTolExact);

    double operator()(std::size_t i, std::size_t j) const {
        return m_[i][j];
    }
    const Matrix2 &entries() const {
        return m_;
    }
    bool operator==(const TransitionMatrix &) const = default;

  private:
    explicit TransitionMatrix(const Matrix2 &m) : m_(m) {
    }
    Matrix2 m_;
};

struct ContextStatistics {
    ProbabilityPair prior;
    TransitionMatrix transition;
    ProbabilityPair outcome;

    static ContextStatistics make(Pair prior, const Matrix2 &transition, Pair outcome,
                                  double tol = kTolExact);

    bool operator==(const ContextStatistics &) const = default;
};

struct LambdaPair {
    Pair value{0.0, 0.0};

    double operator[](std::size_t j) const {
        return value[j];
    }
    bool operator==(const LambdaPair &) const = default;
};

struct TrigPhase {
    double theta;  // principal branch, [0, pi]
    bool operator==(const TrigPhase &) const = default;
};

struct HyperPhase {
    int sign;  // +1 or -1
    double theta;  // >= 0
    bool operator==(const HyperPhase &) const = default;
};

using Phase = std::variant<TrigPhase, HyperPhase>;
using PhasePair = std::array<Phase, 2>;

/// cos(theta) for trigonometric phases, sign * cosh(theta) for hyperbolic ones.
double phase_coefficient(const Phase &phase);
bool is_trigonometric(const PhasePair &phases);

enum class Verdict { Classical, Trigonometric, Hyperbolic, HyperTrigonometric, Boundary };

std::string verdict_name(Verdict verdict);

struct TheoryClass {
    Verdict verdict = Verdict::Classical;
    // HyperTrigonometric: the component with |lambda| > 1.
    // Boundary: the components with ||lambda| - 1| < eps.
    std::vector<int> components;
    double eps_class = kEpsClassExact;

    bool operator==(const TheoryClass &) const = default;
};

struct BalanceReport {
    Pair row_residuals{};
    Pair column_residuals{};
    bool columns_checked = false;
    bool is_stochastic = false;
    bool is_double_stochastic = false;
    double tolerance = kTolExact;
};

enum class DegeneracyPolicy {
    ZeroLambda,  // 0/0 resolves to lambda_j = 0
    Fail,        // 0/0 is a DegenerateContext error as well
};

/// sqrt(p1 p2 p_1j p_2j) for j = 0,1: the weight of the interference term.
Pair interference_weights(const ProbabilityPair &prior, const TransitionMatrix &transition);

/// Formula of total probability (all lambda_j = 0).
Pair total_probability(const ProbabilityPair &prior, const TransitionMatrix &transition);

/// p_j^a = p1 p_1j + p2 p_2j + 2 sqrt(p1 p2 p_1j p_2j) lambda_j.
/// Throws OutOfRange when a component leaves [0,1] by more than tol.
Pair predict_outcome(const ProbabilityPair &prior, const TransitionMatrix &transition,
                     const LambdaPair &lambda, double tol = kTolExact);

/// Inverse of predict_outcome. A denominator at or below tol_degenerate with a
/// numerator above it is a DegenerateContext error; 0/0 goes to the policy.
LambdaPair lambda_from_statistics(const ContextStatistics &stats,
                                  DegeneracyPolicy policy = DegeneracyPolicy::ZeroLambda,
                                  double tol_degenerate = kTolDegenerate);

TheoryClass classify_theory(const LambdaPair &lambda, double eps_class = kEpsClassExact);

BalanceReport check_row_stochastic(const Matrix2 &entries, double tol = kTolExact);
BalanceReport check_double_stochastic(const Matrix2 &entries, double tol = kTolExact);

PhasePair phase_parametrization(const LambdaPair &lambda);

/// sqrt(p1 p2 p11 p21) lambda_1 + sqrt(p1 p2 p12 p22) lambda_2, which vanishes
/// whenever both outcome and rows are normalized.
double normalization_residual(const ContextStatistics &stats, const LambdaPair &lambda);

}  // namespace ctxprob

#endif
