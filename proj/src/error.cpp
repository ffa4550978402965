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

#include "ctxprob/error.hpp"

namespace ctxprob {

int exit_category(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return 1;
        case ErrorKind::DegenerateContext:
        case ErrorKind::ZeroFiltration:
        case ErrorKind::EmptyEnsemble:
            return 2;
        case ErrorKind::Inconsistent:
        case ErrorKind::OutOfRange:
        case ErrorKind::InfeasibleLambda:
        case ErrorKind::NonTrigonometric:
        case ErrorKind::NotBalanced:
        case ErrorKind::GenerationExhausted:
            return 3;
    }
    return 1;
}

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return "InvalidInput";
        case ErrorKind::Inconsistent:
            return "Inconsistent";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::DegenerateContext:
            return "DegenerateContext";
        case ErrorKind::ZeroFiltration:
            return "ZeroFiltration";
        case ErrorKind::EmptyEnsemble:
            return "EmptyEnsemble";
        case ErrorKind::InfeasibleLambda:
            return "InfeasibleLambda";
        case ErrorKind::NonTrigonometric:
            return "NonTrigonometric";
        case ErrorKind::NotBalanced:
            return "NotBalanced";
        case ErrorKind::GenerationExhausted:
            return "GenerationExhausted";
    }
    return "Unknown";
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace ctxprob
