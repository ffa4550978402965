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

#ifndef CTXPROB_HILBERT_HPP
#define CTXPROB_HILBERT_HPP

#include <array>
#include <complex>

#include "ctxprob/calculus.hpp"

namespace ctxprob {

/// Per-outcome complex amplitudes psi_j whose squared moduli reproduce the
/// outcome probabilities. The first term of each psi_j is real nonnegative.
struct AmplitudePair {
    std::array<std::complex<double>, 2> psi;
    PhasePair phases;
};

/// psi_j = sqrt(p1 p_1j) + exp(i theta_j) sqrt(p2 p_2j), so that
/// |psi_j|^2 = a^2 + b^2 + 2ab cos(theta_j) (the parallelogram law).
/// Throws NonTrigonometric if either phase is hyperbolic.
AmplitudePair lift_to_amplitudes(const ContextStatistics &stats, const PhasePair &phases);

/// max_j | |psi_j|^2 - p_j^a |
double born_residual(const AmplitudePair &amplitudes, const Pair &outcome);

struct PhaseConstraint {
    bool holds = false;
    double residual = 0.0;  // |cos theta_1 + cos theta_2|
};

/// Balance forces cos(theta_1) + cos(theta_2) = 0. Throws NonTrigonometric for
/// hyperbolic phases and NotBalanced when the transition matrix is not doubly
/// stochastic within tol.
PhaseConstraint balance_phase_constraint(const ContextStatistics &stats, const PhasePair &phases,
                                         double tol = kTolExact);

}  // namespace ctxprob

#endif
