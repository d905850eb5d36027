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

#include "bosonrace/race.h"

#include <cmath>

#include "bosonrace/error.h"
#include "bosonrace/permanent.h"

namespace bosonrace {

MachineSpec eniac() {
    return MachineSpec{.name = "ENIAC", .additions_per_second = 5000, .multiplications_per_second = 357};
}

MachineSpec tradic() {
    return MachineSpec{.name = "TRADIC", .additions_per_second = 62500, .multiplications_per_second = 3333};
}

std::vector<MachineSpec> default_machines() {
    return {eniac(), tradic()};
}

void validate_machine(const MachineSpec &machine) {
    auto ok = [](double rate) {
        return std::isfinite(rate) && rate > 0;
    };
    if (!ok(machine.additions_per_second) || !ok(machine.multiplications_per_second)) {
        throw Error(ErrorKind::Domain, "machine '" + machine.name + "' needs positive operation rates");
    }
}

RateParams experiment_rate_params(size_t photons) {
    return RateParams{.photons = photons};
}

RateParams upgraded_rate_params(size_t photons) {
    RateParams params;
    params.eta_source = 0.37;
    params.eta_detector = 0.95;
    params.modes = 4 * photons;
    params.photons = photons;
    return params;
}

std::vector<QuantumRun> default_quantum_runs() {
    return {{446084, 90}, {36261, 240}, {11660, 2900}};
}

std::vector<double> default_epsilons() {
    return {0.052, 0.065, 0.041};
}

std::vector<size_t> default_photon_numbers() {
    return {3, 4, 5};
}

double ryser_time_ms(const MachineSpec &machine, size_t n) {
    validate_machine(machine);
    OpCount ops = ryser_op_counts(n);
    return 1000.0 * (static_cast<double>(ops.multiplications) / machine.multiplications_per_second +
                     static_cast<double>(ops.additions) / machine.additions_per_second);
}

double gurvits_time_ms(const MachineSpec &machine, size_t n, double epsilon) {
    validate_machine(machine);
    if (n == 0) {
        throw Error(ErrorKind::Domain, "gurvits_time_ms requires n >= 1");
    }
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::Domain, "gurvits_time_ms requires epsilon > 0");
    }
    double samples = 1.0 / (epsilon * epsilon);
    double size = static_cast<double>(n);
    double per_sample_s = size / machine.multiplications_per_second + size * size / machine.additions_per_second;
    return 1000.0 * samples * per_sample_s;
}

double quantum_sample_time_ms(uint64_t event_count, double duration_s) {
    if (event_count == 0 || !(duration_s > 0)) {
        throw Error(ErrorKind::Domain, "quantum_sample_time_ms needs positive event count and duration");
    }
    return 1000.0 * duration_s / static_cast<double>(event_count);
}

double quantum_sample_time_ms(const QuantumRun &run) {
    return quantum_sample_time_ms(run.event_count, run.duration_s);
}

double no_collision_ratio(size_t modes, size_t photons) {
    if (photons == 0 || photons > modes) {
        throw Error(ErrorKind::Domain, "no_collision_ratio requires 1 <= n <= m");
    }
    // C(m,n)/C(m+n-1,n) = prod_{k<n} (m-k) / (m+n-1-k)
    double ratio = 1;
    for (size_t k = 0; k < photons; k++) {
        ratio *= static_cast<double>(modes - k) / static_cast<double>(modes + photons - 1 - k);
    }
    return ratio;
}

double expected_count_rate(const RateParams &p) {
    for (double eta : {p.eta_source, p.eta_demux, p.eta_circuit, p.eta_detector}) {
        if (!(eta >= 0 && eta <= 1)) {
            throw Error(ErrorKind::Domain, "efficiencies must lie in [0, 1]");
        }
    }
    if (!(p.pump_rate_hz > 0) || !std::isfinite(p.pump_rate_hz)) {
        throw Error(ErrorKind::Domain, "pump rate must be positive");
    }
    double n = static_cast<double>(p.photons);
    double per_photon = p.eta_source * p.eta_demux * p.eta_circuit * p.eta_detector;
    return p.pump_rate_hz / n * std::pow(per_photon, n) * no_collision_ratio(p.modes, p.photons);
}

double round_one_decimal(double value) {
    return std::floor(value * 10.0 + 0.5) / 10.0;
}

RaceTable race_table(
    const std::vector<MachineSpec> &machines,
    const std::vector<QuantumRun> &quantum,
    const std::vector<size_t> &photon_numbers,
    const std::vector<double> &epsilons) {
    if (!quantum.empty() && quantum.size() != photon_numbers.size()) {
        throw Error(ErrorKind::Alignment, "quantum runs do not align with photon numbers");
    }
    if (!machines.empty() && epsilons.size() != photon_numbers.size()) {
        throw Error(ErrorKind::Alignment, "epsilons do not align with photon numbers");
    }

    RaceTable table{.photon_numbers = photon_numbers, .rows = {}};
    for (const MachineSpec &machine : machines) {
        RaceRow ryser{.label = machine.name + " (Ryser)", .machine = machine.name, .method = "Ryser", .values_ms = {}};
        RaceRow gurvits{
            .label = machine.name + " (Gurvits)", .machine = machine.name, .method = "Gurvits", .values_ms = {}};
        for (size_t k = 0; k < photon_numbers.size(); k++) {
            ryser.values_ms.push_back(ryser_time_ms(machine, photon_numbers[k]));
            gurvits.values_ms.push_back(gurvits_time_ms(machine, photon_numbers[k], epsilons[k]));
        }
        table.rows.push_back(std::move(ryser));
        table.rows.push_back(std::move(gurvits));
    }
    if (!quantum.empty()) {
        RaceRow row{.label = "Multi-photon interferometry", .machine = "", .method = "quantum", .values_ms = {}};
        for (const QuantumRun &run : quantum) {
            row.values_ms.push_back(quantum_sample_time_ms(run));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

RaceTable default_race_table() {
    return race_table(default_machines(), default_quantum_runs(), default_photon_numbers(), default_epsilons());
}

}  // namespace bosonrace
