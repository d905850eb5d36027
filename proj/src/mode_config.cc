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

#include "bosonrace/mode_config.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>

#include "bosonrace/error.h"

namespace bosonrace {

ModeConfig::ModeConfig(std::vector<unsigned> occupations) : occupations_(std::move(occupations)) {
    if (occupations_.empty()) {
        throw Error(ErrorKind::Config, "mode configuration needs at least one mode");
    }
    for (unsigned k : occupations_) {
        photons_ += k;
    }
}

ModeConfig ModeConfig::from_modes(size_t num_modes, std::span<const size_t> modes) {
    std::vector<unsigned> occupations(num_modes);
    for (size_t mode : modes) {
        if (mode >= num_modes) {
            throw Error(
                ErrorKind::Config,
                "mode index " + std::to_string(mode) + " out of range for " + std::to_string(num_modes) + " modes");
        }
        occupations[mode]++;
    }
    return ModeConfig(std::move(occupations));
}

ModeConfig ModeConfig::first_modes(size_t num_modes, size_t photons) {
    if (photons > num_modes) {
        throw Error(ErrorKind::Config, "more photons than modes for a collision-free input");
    }
    std::vector<unsigned> occupations(num_modes);
    std::fill_n(occupations.begin(), photons, 1u);
    return ModeConfig(std::move(occupations));
}

bool ModeConfig::is_collision_free() const {
    return std::all_of(occupations_.begin(), occupations_.end(), [](unsigned k) {
        return k <= 1;
    });
}

std::vector<size_t> ModeConfig::modes() const {
    std::vector<size_t> result;
    result.reserve(photons_);
    for (size_t mode = 0; mode < occupations_.size(); mode++) {
        result.insert(result.end(), occupations_[mode], mode);
    }
    return result;
}

double ModeConfig::multiplicity() const {
    double result = 1;
    for (unsigned k : occupations_) {
        for (unsigned f = 2; f <= k; f++) {
            result *= f;
        }
    }
    return result;
}

bool ModeConfig::operator<(const ModeConfig &other) const {
    if (photons_ != other.photons_ || occupations_.size() != other.occupations_.size()) {
        return std::tie(occupations_, photons_) < std::tie(other.occupations_, other.photons_);
    }
    // At fixed photon number, mode-list order is reverse occupation order.
    return std::lexicographical_compare(
        occupations_.begin(), occupations_.end(), other.occupations_.begin(), other.occupations_.end(),
        std::greater<>());
}

std::string ModeConfig::str() const {
    std::string out = "(";
    for (size_t k = 0; k < occupations_.size(); k++) {
        if (k) {
            out += ',';
        }
        out += std::to_string(occupations_[k]);
    }
    out += ')';
    return out;
}

double binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    double result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(result);
}

}  // namespace bosonrace
