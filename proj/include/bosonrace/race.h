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

#ifndef BOSONRACE_RACE_H
#define BOSONRACE_RACE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bosonrace {

/// A classical computer reduced to its addition and multiplication rates.
struct MachineSpec {
    std::string name;
    double additions_per_second = 0;
    double multiplications_per_second = 0;

    bool operator==(const MachineSpec &) const = default;
};

/// 5000 additions or 357 multiplications per second.
MachineSpec eniac();
/// 62500 additions or 3333 multiplications per second.
MachineSpec tradic();
std::vector<MachineSpec> default_machines();

/// Throws ErrorKind::Domain unless both rates are positive and finite.
void validate_machine(const MachineSpec &machine);

/// Quantum-dot boson sampler rate model parameters.
struct RateParams {
    double pump_rate_hz = 76e6;
    double eta_source = 0.338;
    double eta_demux = 0.845;
    double eta_circuit = 0.905;
    double eta_detector = 0.32;
    size_t modes = 9;
    size_t photons = 3;
};

/// Parameters of the 3/4/5-photon experiment on a 9-mode circuit.
RateParams experiment_rate_params(size_t photons);
/// Improved source (0.37) and detectors (0.95) on a circuit with 4n modes.
RateParams upgraded_rate_params(size_t photons);

/// One quantum run: registered events over an accumulation time.
struct QuantumRun {
    uint64_t event_count = 0;
    double duration_s = 0;
};

/// Runs of the 3-, 4- and 5-photon experiment.
std::vector<QuantumRun> default_quantum_runs();
/// Additive errors of the 3-, 4- and 5-photon experiment.
std::vector<double> default_epsilons();
std::vector<size_t> default_photon_numbers();

double ryser_time_ms(const MachineSpec &machine, size_t n);

/// Time for the sign-pattern estimator to additive error epsilon.
///
/// Cost model: 1 / epsilon^2 samples (not rounded), each costing n
/// multiplications (product of row sums) and n^2 additions (signed row sums).
double gurvits_time_ms(const MachineSpec &machine, size_t n, double epsilon);

/// Mean time per registered event.
double quantum_sample_time_ms(uint64_t event_count, double duration_s);
double quantum_sample_time_ms(const QuantumRun &run);

/// C(m, n) / C(m + n - 1, n), evaluated as a running product.
double no_collision_ratio(size_t modes, size_t photons);

/// (R_pump / n) (eta_source eta_demux eta_circuit eta_detector)^n S(m, n),
/// in events per second.
double expected_count_rate(const RateParams &params);

/// Half-up rounding to one decimal, as the timing table is displayed.
double round_one_decimal(double value);

struct RaceRow {
    std::string label;
    /// Machine name; empty for the quantum row.
    std::string machine;
    /// "Ryser", "Gurvits" or "quantum".
    std::string method;
    /// Unrounded milliseconds, one per photon number.
    std::vector<double> values_ms;
};

struct RaceTable {
    std::vector<size_t> photon_numbers;
    std::vector<RaceRow> rows;
};

/// Ryser and Gurvits rows per machine followed by the quantum row. `quantum`
/// and `epsilons` align with `photon_numbers`; an empty `quantum` omits that
/// row. Throws ErrorKind::Alignment on length mismatches.
RaceTable race_table(
    const std::vector<MachineSpec> &machines,
    const std::vector<QuantumRun> &quantum,
    const std::vector<size_t> &photon_numbers,
    const std::vector<double> &epsilons);

RaceTable default_race_table();

}  // namespace bosonrace

#endif
