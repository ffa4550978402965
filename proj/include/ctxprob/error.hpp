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

#ifndef CTXPROB_ERROR_HPP
#define CTXPROB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxprob {

enum class ErrorKind {
    InvalidInput,
    // Probability data that violates its own invariants (sums, ranges).
    Inconsistent,
    OutOfRange,
    DegenerateContext,
    ZeroFiltration,
    EmptyEnsemble,
    InfeasibleLambda,
    NonTrigonometric,
    NotBalanced,
    GenerationExhausted,
};

/// Exit-code category of an error kind: 1 invalid input, 2 degenerate
/// statistics or model, 3 infeasible or inconsistent data.
int exit_category(ErrorKind kind) noexcept;

std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

  private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace ctxprob

#endif
