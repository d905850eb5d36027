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

#ifndef BOSONRACE_MODE_CONFIG_H
#define BOSONRACE_MODE_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bosonrace {

/// Photon occupation numbers of m optical modes (a Fock basis label).
///
/// Configurations with equal mode and photon counts are ordered
/// lexicographically by their sorted list of occupied modes, so for m = 9,
/// n = 3 the order starts 0-1-2, 0-1-3, ... and for m = 2, n = 2 it is
/// (2,0), (1,1), (0,2).
class ModeConfig {
   public:
    explicit ModeConfig(std::vector<unsigned> occupations);

    /// Configuration with one photon per listed mode; repeats stack.
    static ModeConfig from_modes(size_t num_modes, std::span<const size_t> modes);
    /// Single photons in modes 0..n-1.
    static ModeConfig first_modes(size_t num_modes, size_t photons);

    size_t num_modes() const noexcept {
        return occupations_.size();
    }
    size_t num_photons() const noexcept {
        return photons_;
    }
    bool is_collision_free() const;
    unsigned operator[](size_t mode) const {
        return occupations_[mode];
    }
    const std::vector<unsigned> &occupations() const noexcept {
        return occupations_;
    }

    /// Occupied modes in increasing order, each repeated by its occupation.
    std::vector<size_t> modes() const;
    /// Product of occupation factorials.
    double multiplicity() const;

    bool operator==(const ModeConfig &other) const = default;
    /// The mode-list lexicographic order described above.
    bool operator<(const ModeConfig &other) const;

    /// "(2,0,1)" style rendering.
    std::string str() const;

   private:
    std::vector<unsigned> occupations_;
    size_t photons_ = 0;
};

/// Binomial coefficient as a double (exact up to 2^53).
double binomial(uint64_t n, uint64_t k);

}  // namespace bosonrace

#endif
