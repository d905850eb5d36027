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

#ifndef BOSONRACE_FORMATS_H
#define BOSONRACE_FORMATS_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bosonrace/complex_matrix.h"
#include "bosonrace/distributions.h"
#include "bosonrace/interferometer.h"
#include "bosonrace/race.h"
#include "bosonrace/validation.h"

namespace bosonrace {

/// Shortest form is not used: every real is written with 17 significant digits.
std::string format_real(double value);

/// {"rows": R, "cols": C, "entries": [[re, im], ...]} in row-major order.
std::string matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(std::string_view text);

/// {"m": 9, "layout": "triangular", "crossings": [{"top_row": i, "r": 0.42, "phi": 0.0}, ...]}.
/// On input a crossing may give "theta" (polarization angle) instead of "r";
/// its reflectivity is then effective_reflectivity with the default coating.
std::string mesh_to_json(const MeshSpec &spec);
MeshSpec mesh_from_json(std::string_view text);

/// "1-3-7" for collision-free configurations in a no-collision set,
/// "(2,0,1)" (CSV-quoted when written) otherwise.
std::string render_config(const ModeConfig &config, Restriction restriction);
/// Accepts both renderings, with or without surrounding CSV quotes.
ModeConfig parse_config(std::string_view text, size_t modes);

/// Header `config,probability`, one row per outcome in outcome order.
void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist);
nlohmann::json distribution_metadata(const OutcomeDistribution &dist, Model model);

/// One rendered configuration per line, no header.
void write_events_csv(std::ostream &out, const EventStream &events, Restriction restriction);
EventStream read_events_csv(std::istream &in, size_t modes);
/// {seed, source, count} plus the outcome-set shape.
nlohmann::json events_sidecar(const EventStream &events, Restriction restriction, size_t modes, size_t photons);

/// `event_index,log_chi,posterior`, 1-based event index.
void write_bayesian_csv(std::ostream &out, const BayesianTrace &trace);
/// `event_index,L,counter`, 1-based event index.
void write_counter_csv(std::ostream &out, const CounterTrace &trace);

struct Verdict {
    double final_posterior = 0;
    int64_t final_counter = 0;
    std::optional<size_t> events_to_998;
    std::optional<size_t> events_to_positive;
    std::optional<MetricReport> metrics;
};

Verdict make_verdict(const BayesianTrace &bayes, const CounterTrace &counter);
nlohmann::json verdict_to_json(const Verdict &verdict);

/// Rows as displayed: label then one value per photon number, one decimal.
void write_race_csv(std::ostream &out, const RaceTable &table);
/// Same table with unrounded values.
nlohmann::json race_to_json(const RaceTable &table);

/// [{"name": "ENIAC", "adds_per_s": 5000, "mults_per_s": 357}, ...]
std::vector<MachineSpec> machines_from_json(std::string_view text);
std::string machines_to_json(const std::vector<MachineSpec> &machines);

}  // namespace bosonrace

#endif
