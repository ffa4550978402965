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

#include "ctxprob/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ctxprob/error.hpp"

namespace ctxprob {

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        fail(ErrorKind::InvalidInput, "non-finite value cannot be serialized");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    std::string out(buf, res.ptr);
    // Keep floats recognizable as floats so a reparse reproduces the same text.
    if (out.find_first_of(".e") == std::string::npos) {
        out += ".0";
    }
    return out;
}

namespace {

void write_canonical(const Json &value, std::string &out, int depth) {
    const std::string indent(2 * (depth + 1), ' ');
    const std::string close_indent(2 * depth, ' ');
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &[key, item] : value.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += indent + Json(key).dump() + ": ";
                write_canonical(item, out, depth + 1);
            }
            out += "\n" + close_indent + "}";
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            bool scalar = true;
            for (const auto &item : value) {
                scalar = scalar && item.is_primitive();
            }
            if (scalar) {
                out += "[";
                for (std::size_t k = 0; k < value.size(); ++k) {
                    if (k) {
                        out += ", ";
                    }
                    write_canonical(value[k], out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < value.size(); ++k) {
                if (k) {
                    out += ",\n";
                }
                out += indent;
                write_canonical(value[k], out, depth + 1);
            }
            out += "\n" + close_indent + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(value.get<double>());
            return;
        default:
            out += value.dump();
            return;
    }
}

const Json &require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double read_number(const Json &j, const char *what) {
    if (!j.is_number()) {
        fail(ErrorKind::InvalidInput, std::string("field '") + what + "' must be a number");
    }
    return j.get<double>();
}

std::uint64_t read_count(const Json &j, const char *what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        fail(ErrorKind::InvalidInput, std::string("field '") + what + "' must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

Pair read_pair(const Json &j, const char *what) {
    if (!j.is_array() || j.size() != 2) {
        fail(ErrorKind::InvalidInput, std::string("field '") + what + "' must be an array of two numbers");
    }
    return {read_number(j[0], what), read_number(j[1], what)};
}

Matrix2 read_matrix(const Json &j, const char *what) {
    if (!j.is_array() || j.size() != 2) {
        fail(ErrorKind::InvalidInput, std::string("field '") + what + "' must be a 2x2 array");
    }
    return {read_pair(j[0], what), read_pair(j[1], what)};
}

int read_outcome_index(const Json &j, const char *what) {
    const std::uint64_t v = read_count(j, what);
    if (v != 1 && v != 2) {
        fail(ErrorKind::InvalidInput, std::string("field '") + what + "' must be outcome 1 or 2");
    }
    return static_cast<int>(v) - 1;
}

Json tally_to_json(const Tally &t) {
    return Json{{"n", t.n}, {"counts", Json::array({t.counts[0], t.counts[1]})}};
}

Tally tally_from_json(const Json &j, const char *what) {
    Tally t;
    t.n = read_count(require(j, "n"), what);
    const Json &c = require(j, "counts");
    if (!c.is_array() || c.size() != 2) {
        fail(ErrorKind::InvalidInput, std::string(what) + ".counts must be an array of two integers");
    }
    t.counts = {read_count(c[0], what), read_count(c[1], what)};
    return t;
}

Json observable_to_json(const DichotomicObservable &o) {
    return Json{{"name", o.name}, {"values", Json::array({o.labels[0], o.labels[1]})}};
}

DichotomicObservable observable_from_json(const Json &j) {
    const Json &values = require(j, "values");
    if (!values.is_array() || values.size() != 2 || !values[0].is_string() || !values[1].is_string()) {
        fail(ErrorKind::InvalidInput, "observable values must be two strings");
    }
    const Json &name = require(j, "name");
    if (!name.is_string()) {
        fail(ErrorKind::InvalidInput, "observable name must be a string");
    }
    return DichotomicObservable::make(name.get<std::string>(), values[0].get<std::string>(),
                                      values[1].get<std::string>());
}

}  // namespace

std::string canonical_dump(const Json &value) {
    std::string out;
    write_canonical(value, out, 0);
    out += "\n";
    return out;
}

Json pair_to_json(const Pair &p) {
    return Json::array({p[0], p[1]});
}

Json matrix_to_json(const Matrix2 &m) {
    return Json::array({pair_to_json(m[0]), pair_to_json(m[1])});
}

Json statistics_to_json(const ContextStatistics &stats) {
    return Json{{"prior", pair_to_json(stats.prior.values())},
                {"transition", matrix_to_json(stats.transition.entries())},
                {"outcome", pair_to_json(stats.outcome.values())}};
}

Json model_to_json(const Model &model) {
    return std::visit(
        [](const auto &m) -> Json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KolmogorovModel>) {
                Json points = Json::array();
                for (const auto &pt : m.points) {
                    points.push_back(Json{{"weight", pt.weight}, {"a", pt.a + 1}, {"b", pt.b + 1}});
                }
                return Json{{"family", "classical"}, {"points", points}};
            } else if constexpr (std::is_same_v<T, QubitModel>) {
                return Json{{"family", "qubit"},
                            {"alpha", m.alpha},
                            {"phi", m.phi},
                            {"b_rotation", m.b_rotation},
                            {"b_phase", m.b_phase}};
            } else {
                return Json{{"family", "synthetic"},
                            {"prior", pair_to_json(m.prior)},
                            {"transition", matrix_to_json(m.transition)},
                            {"target_lambda", pair_to_json(m.target_lambda.value)}};
            }
        },
        model);
}

Model model_from_json(const Json &j) {
    const Json &family = require(j, "family");
    if (!family.is_string()) {
        fail(ErrorKind::InvalidInput, "model family must be a string");
    }
    const std::string name = family.get<std::string>();
    if (name == "classical") {
        const Json &points = require(j, "points");
        if (!points.is_array()) {
            fail(ErrorKind::InvalidInput, "model points must be an array");
        }
        std::vector<ElementaryEvent> events;
        for (const Json &pt : points) {
            events.push_back({read_number(require(pt, "weight"), "weight"), read_outcome_index(require(pt, "a"), "a"),
                              read_outcome_index(require(pt, "b"), "b")});
        }
        return KolmogorovModel::make(std::move(events));
    }
    if (name == "qubit") {
        return QubitModel{read_number(require(j, "alpha"), "alpha"), read_number(require(j, "phi"), "phi"),
                          read_number(require(j, "b_rotation"), "b_rotation"),
                          read_number(require(j, "b_phase"), "b_phase")};
    }
    if (name == "synthetic") {
        return SyntheticModel{read_pair(require(j, "prior"), "prior"),
                              read_matrix(require(j, "transition"), "transition"),
                              LambdaPair{read_pair(require(j, "target_lambda"), "target_lambda")}};
    }
    fail(ErrorKind::InvalidInput, "unknown model family '" + name + "'");
}

Json experiment_to_json(const ExperimentFile &file) {
    Json j{{"format_version", file.format_version},
           {"observables", Json{{"A", observable_to_json(file.observable_a)},
                                {"B", observable_to_json(file.observable_b)}}}};
    if (const auto *exact = std::get_if<ContextStatistics>(&file.data)) {
        j["exact"] = statistics_to_json(*exact);
    } else {
        const auto &counts = std::get<CountsRecord>(file.data);
        j["counts"] = Json{{"seed", counts.seed},
                           {"context", tally_to_json(counts.context)},
                           {"filtration", tally_to_json(counts.filtration)},
                           {"filtered", Json::array({tally_to_json(counts.filtered[0]),
                                                     tally_to_json(counts.filtered[1])})}};
    }
    if (file.model) {
        j["model"] = model_to_json(*file.model);
    }
    if (file.note) {
        j["note"] = *file.note;
    }
    return j;
}

ExperimentFile experiment_from_json(const Json &j) {
    if (!j.is_object()) {
        fail(ErrorKind::InvalidInput, "experiment file must be a JSON object");
    }
    ExperimentFile file;
    const Json &version = require(j, "format_version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion) {
        fail(ErrorKind::InvalidInput, "unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
    }
    if (j.contains("observables")) {
        const Json &obs = j.at("observables");
        file.observable_a = observable_from_json(require(obs, "A"));
        file.observable_b = observable_from_json(require(obs, "B"));
    }
    const bool has_exact = j.contains("exact");
    const bool has_counts = j.contains("counts");
    if (has_exact == has_counts) {
        fail(ErrorKind::InvalidInput, "experiment file needs exactly one of 'exact' or 'counts'");
    }
    if (has_exact) {
        const Json &e = j.at("exact");
        file.data = ContextStatistics::make(read_pair(require(e, "prior"), "prior"),
                                            read_matrix(require(e, "transition"), "transition"),
                                            read_pair(require(e, "outcome"), "outcome"));
    } else {
        const Json &c = j.at("counts");
        CountsRecord counts;
        counts.seed = read_count(require(c, "seed"), "seed");
        counts.context = tally_from_json(require(c, "context"), "context");
        counts.filtration = tally_from_json(require(c, "filtration"), "filtration");
        const Json &filtered = require(c, "filtered");
        if (!filtered.is_array() || filtered.size() != 2) {
            fail(ErrorKind::InvalidInput, "counts.filtered must hold one tally per B-outcome");
        }
        counts.filtered = {tally_from_json(filtered[0], "filtered"), tally_from_json(filtered[1], "filtered")};
        counts.validate();
        file.data = counts;
    }
    if (j.contains("model")) {
        file.model = model_from_json(j.at("model"));
    }
    if (j.contains("note")) {
        if (!j.at("note").is_string()) {
            fail(ErrorKind::InvalidInput, "note must be a string");
        }
        file.note = j.at("note").get<std::string>();
    }
    return file;
}

std::string serialize_experiment(const ExperimentFile &file) {
    return canonical_dump(experiment_to_json(file));
}

ExperimentFile parse_experiment(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return experiment_from_json(j);
}

ExperimentFile load_experiment(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment(buf.str());
}

}  // namespace ctxprob
