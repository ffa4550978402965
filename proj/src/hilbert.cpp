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

#include "ctxprob/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

void require_trigonometric(const PhasePair &phases) {
    for (int j = 0; j < 2; ++j) {
        if (!std::holds_alternative<TrigPhase>(phases[j])) {
            fail(ErrorKind::NonTrigonometric,
                 "phase " + std::to_string(j + 1) + " is hyperbolic; no complex amplitude reproduces it");
        }
    }
}

}  // namespace

AmplitudePair lift_to_amplitudes(const ContextStatistics &stats, const PhasePair &phases) {
    require_trigonometric(phases);
    AmplitudePair out{{}, phases};
    for (std::size_t j = 0; j < 2; ++j) {
        const double a = std::sqrt(std::max(0.0, stats.prior[0] * stats.transition(0, j)));
        const double b = std::sqrt(std::max(0.0, stats.prior[1] * stats.transition(1, j)));
        const double theta = std::get<TrigPhase>(phases[j]).theta;
        out.psi[j] = a + std::polar(b, theta);
    }
    return out;
}

double born_residual(const AmplitudePair &amplitudes, const Pair &outcome) {
    double worst = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        worst = std::max(worst, std::abs(std::norm(amplitudes.psi[j]) - outcome[j]));
    }
    return worst;
}

PhaseConstraint balance_phase_constraint(const ContextStatistics &stats, const PhasePair &phases,
                                         double tol) {
    require_trigonometric(phases);
    const BalanceReport balance = check_double_stochastic(stats.transition.entries(), tol);
    if (!balance.is_double_stochastic) {
        std::ostringstream msg;
        msg << "transition matrix is not doubly stochastic (column residuals " << balance.column_residuals[0]
            << ", " << balance.column_residuals[1] << ")";
        fail(ErrorKind::NotBalanced, msg.str());
    }
    PhaseConstraint out;
    out.residual = std::abs(phase_coefficient(phases[0]) + phase_coefficient(phases[1]));
    out.holds = out.residual <= tol;
    return out;
}

}  // namespace ctxprob
