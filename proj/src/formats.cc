// Copyright 2026 The bosonrace Authors
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

#include "bosonrace/formats.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "bosonrace/error.h"

namespace bosonrace {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Config, std::string(what) + ": " + e.what());
    }
}

template <typename T>
T get_field(const json &j, const char *key, const char *what) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::Config, std::string(what) + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Config, std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
        s.remove_suffix(1);
    }
    return s;
}

size_t parse_index(std::string_view token) {
    token = trim(token);
    if (token.empty()) {
        throw Error(ErrorKind::Config, "empty mode index");
    }
    size_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw Error(ErrorKind::Config, "bad mode index '" + std::string(token) + "'");
        }
        value = value * 10 + static_cast<size_t>(c - '0');
    }
    return value;
}

std::vector<size_t> split_indices(std::string_view text, char sep) {
    std::vector<size_t> values;
    size_t start = 0;
    while (true) {
        size_t end = text.find(sep, start);
        values.push_back(parse_index(text.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) {
            return values;
        }
        start = end + 1;
    }
}

std::string csv_field(const std::string &s) {
    if (s.find(',') == std::string::npos) {
        return s;
    }
    return '"' + s + '"';
}

json optional_to_json(const std::optional<size_t> &v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string matrix_to_json(const ComplexMatrix &m) {
    std::string out = "{\"rows\": " + std::to_string(m.rows()) + ", \"cols\": " + std::to_string(m.cols()) +
                      ", \"entries\": [";
    const auto &entries = m.entries();
    for (size_t k = 0; k < entries.size(); k++) {
        if (k) {
            out += ", ";
        }
        out += '[' + format_real(entries[k].real()) + ", " + format_real(entries[k].imag()) + ']';
    }
    out += "]}\n";
    return out;
}

ComplexMatrix matrix_from_json(std::string_view text) {
    json j = parse_json(text, "matrix");
    auto rows = get_field<size_t>(j, "rows", "matrix");
    auto cols = get_field<size_t>(j, "cols", "matrix");
    auto pairs = get_field<std::vector<std::vector<double>>>(j, "entries", "matrix");
    std::vector<Complex> entries;
    entries.reserve(pairs.size());
    for (const auto &pair : pairs) {
        if (pair.size() != 2) {
            throw Error(ErrorKind::Config, "matrix: each entry must be [re, im]");
        }
        entries.emplace_back(pair[0], pair[1]);
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

std::string mesh_to_json(const MeshSpec &spec) {
    json crossings = json::array();
    for (const Crossing &c : spec.crossings) {
        crossings.push_back({{"top_row", c.top_row}, {"r", c.reflectivity}, {"phi", c.phase}});
    }
    json j = {{"m", spec.modes}, {"layout", spec.layout}, {"crossings", crossings}};
    return j.dump(2) + "\n";
}

MeshSpec mesh_from_json(std::string_view text) {
    json j = parse_json(text, "mesh");
    MeshSpec spec;
    spec.modes = get_field<size_t>(j, "m", "mesh");
    if (j.contains("layout")) {
        spec.layout = get_field<std::string>(j, "layout", "mesh");
    }
    auto crossings = get_field<json>(j, "crossings", "mesh");
    if (!crossings.is_array()) {
        throw Error(ErrorKind::Config, "mesh: 'crossings' must be an array");
    }
    for (const json &c : crossings) {
        Crossing crossing;
        crossing.top_row = get_field<size_t>(c, "top_row", "mesh crossing");
        if (c.contains("r")) {
            crossing.reflectivity = get_field<double>(c, "r", "mesh crossing");
        } else if (c.contains("theta")) {
            crossing.reflectivity =
                effective_reflectivity(PolarizationSplit{.theta = get_field<double>(c, "theta", "mesh crossing")});
        } else {
            throw Error(ErrorKind::Config, "mesh crossing: needs 'r' or 'theta'");
        }
        if (c.contains("phi")) {
            crossing.phase = get_field<double>(c, "phi", "mesh crossing");
        }
        spec.crossings.push_back(crossing);
    }
    validate_mesh(spec);
    return spec;
}

std::string render_config(const ModeConfig &config, Restriction restriction) {
    if (restriction == Restriction::NoCollision && config.is_collision_free()) {
        std::string out;
        for (size_t mode : config.modes()) {
            if (!out.empty()) {
                out += '-';
            }
            out += std::to_string(mode);
        }
        return out;
    }
    return config.str();
}

ModeConfig parse_config(std::string_view text, size_t modes) {
    text = trim(text);
    if (text.empty()) {
        throw Error(ErrorKind::Config, "empty configuration");
    }
    if (text.front() == '(') {
        if (text.back() != ')') {
            throw Error(ErrorKind::Config, "unterminated configuration '" + std::string(text) + "'");
        }
        std::vector<size_t> values = split_indices(text.substr(1, text.size() - 2), ',');
        if (values.size() != modes) {
            throw Error(
                ErrorKind::Config, "configuration '" + std::string(text) + "' does not have " +
                                       std::to_string(modes) + " modes");
        }
        return ModeConfig(std::vector<unsigned>(values.begin(), values.end()));
    }
    std::vector<size_t> occupied = split_indices(text, '-');
    ModeConfig config = ModeConfig::from_modes(modes, occupied);
    if (!config.is_collision_free()) {
        throw Error(ErrorKind::Config, "index rendering '" + std::string(text) + "' repeats a mode");
    }
    return config;
}

void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist) {
    out << "config,probability\n";
    for (size_t k = 0; k < dist.size(); k++) {
        out << csv_field(render_config(dist.outcomes[k], dist.restriction)) << ','
            << format_real(dist.probabilities[k]) << '\n';
    }
}

nlohmann::json distribution_metadata(const OutcomeDistribution &dist, Model model) {
    return json{
        {"model", to_string(model)},
        {"restriction", to_string(dist.restriction)},
        {"m", dist.modes},
        {"n", dist.photons},
        {"outcomes", dist.size()},
        {"mass", dist.mass},
    };
}

void write_events_csv(std::ostream &out, const EventStream &events, Restriction restriction) {
    for (const ModeConfig &event : events.events) {
        out << csv_field(render_config(event, restriction)) << '\n';
    }
}

EventStream read_events_csv(std::istream &in, size_t modes) {
    EventStream stream;
    stream.source = "file";
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        stream.events.push_back(parse_config(line, modes));
    }
    return stream;
}

nlohmann::json events_sidecar(const EventStream &events, Restriction restriction, size_t modes, size_t photons) {
    return json{
        {"seed", events.seed},
        {"source", events.source},
        {"count", events.events.size()},
        {"restriction", to_string(restriction)},
        {"m", modes},
        {"n", photons},
    };
}

void write_bayesian_csv(std::ostream &out, const BayesianTrace &trace) {
    out << "event_index,log_chi,posterior\n";
    for (size_t k = 0; k < trace.size(); k++) {
        out << k + 1 << ',' << format_real(trace.log_chi[k]) << ',' << format_real(trace.posterior[k]) << '\n';
    }
}

void write_counter_csv(std::ostream &out, const CounterTrace &trace) {
    out << "event_index,L,counter\n";
    for (size_t k = 0; k < trace.size(); k++) {
        out << k + 1 << ',' << format_real(trace.ratio[k]) << ',' << trace.counter[k] << '\n';
    }
}

Verdict make_verdict(const BayesianTrace &bayes, const CounterTrace &counter) {
    return Verdict{
        .final_posterior = bayes.final_posterior(),
        .final_counter = counter.final_counter(),
        .events_to_998 = bayes.events_to_posterior(0.998),
        .events_to_positive = counter.events_to_positive(),
        .metrics = std::nullopt,
    };
}

nlohmann::json verdict_to_json(const Verdict &v) {
    json j = {
        {"final_posterior", v.final_posterior},
        {"final_counter", v.final_counter},
        {"events_to_998", optional_to_json(v.events_to_998)},
        {"events_to_positive", optional_to_json(v.events_to_positive)},
    };
    if (v.metrics) {
        j["similarity"] = v.metrics->similarity;
        j["distance"] = v.metrics->distance;
        j["epsilon"] = v.metrics->epsilon;
    }
    return j;
}

void write_race_csv(std::ostream &out, const RaceTable &table) {
    out << "row";
    for (size_t n : table.photon_numbers) {
        out << ',' << n << "-photon";
    }
    out << '\n';
    char buf[64];
    for (const RaceRow &row : table.rows) {
        out << csv_field(row.label);
        for (double v : row.values_ms) {
            std::snprintf(buf, sizeof(buf), "%.1f", round_one_decimal(v));
            out << ',' << buf;
        }
        out << '\n';
    }
}

nlohmann::json race_to_json(const RaceTable &table) {
    json rows = json::array();
    for (const RaceRow &row : table.rows) {
        rows.push_back({
            {"label", row.label},
            {"machine", row.machine},
            {"method", row.method},
            {"values_ms", row.values_ms},
        });
    }
    return json{{"unit", "ms"}, {"photon_numbers", table.photon_numbers}, {"rows", rows}};
}

std::vector<MachineSpec> machines_from_json(std::string_view text) {
    json j = parse_json(text, "machine registry");
    if (!j.is_array()) {
        throw Error(ErrorKind::Config, "machine registry must be a JSON array");
    }
    std::vector<MachineSpec> machines;
    for (const json &entry : j) {
        MachineSpec machine{
            .name = get_field<std::string>(entry, "name", "machine"),
            .additions_per_second = get_field<double>(entry, "adds_per_s", "machine"),
            .multiplications_per_second = get_field<double>(entry, "mults_per_s", "machine"),
        };
        validate_machine(machine);
        machines.push_back(std::move(machine));
    }
    return machines;
}

std::string machines_to_json(const std::vector<MachineSpec> &machines) {
    json j = json::array();
    for (const MachineSpec &m : machines) {
        j.push_back({{"name", m.name}, {"adds_per_s", m.additions_per_second}, {"mults_per_s", m.multiplications_per_second}});
    }
    return j.dump(2) + "\n";
}

}  // namespace bosonrace
