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

#ifndef CTXPROB_IO_HPP
#define CTXPROB_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "ctxprob/calculus.hpp"
#include "ctxprob/oracles.hpp"
#include "ctxprob/sampling.hpp"

namespace ctxprob {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// One experiment: either exact probabilities or raw tallies, plus the
/// generating model when the data was simulated.
struct ExperimentFile {
    int format_version = kFormatVersion;
    DichotomicObservable observable_a = DichotomicObservable::default_a();
    DichotomicObservable observable_b = DichotomicObservable::default_b();
    std::variant<CountsRecord, ContextStatistics> data;
    std::optional<Model> model;
    std::optional<std::string> note;

    bool is_exact() const {
        return std::holds_alternative<ContextStatistics>(data);
    }
    bool operator==(const ExperimentFile &) const = default;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Sorted keys, two-space indent, shortest round-trip floats, trailing newline.
std::string canonical_dump(const Json &value);

Json pair_to_json(const Pair &p);
Json matrix_to_json(const Matrix2 &m);
Json statistics_to_json(const ContextStatistics &stats);
Json model_to_json(const Model &model);
Model model_from_json(const Json &j);

Json experiment_to_json(const ExperimentFile &file);
/// Throws InvalidInput on schema errors and Inconsistent when the
/// probabilities themselves violate their invariants.
ExperimentFile experiment_from_json(const Json &j);

std::string serialize_experiment(const ExperimentFile &file);
ExperimentFile parse_experiment(std::string_view text);
ExperimentFile load_experiment(const std::string &path);

}  // namespace ctxprob

#endif
