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

#ifndef BOSONRACE_RNG_H
#define BOSONRACE_RNG_H

#include <complex>
#include <cstdint>
#include <random>

namespace bosonrace {

/// SplitMix64 finalizer. Used only for seed derivation.
uint64_t splitmix64(uint64_t x);

/// Seed for substream `index` of `master`. Distinct indices give
/// statistically independent streams; the mapping is fixed forever.
uint64_t derive_seed(uint64_t master, uint64_t index);

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard. The conversions below are hand written because the
/// std:: distributions differ between standard library implementations.
///   uniform():  top 53 bits of one engine word, scaled to [0, 1).
///   normal():   Box-Muller on two uniforms, second variate cached.
///   sign_bits(): one raw engine word, one sign per bit.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {
    }

    /// Child generator for substream `index`, independent of this one's state.
    static Rng split(uint64_t master_seed, uint64_t index) {
        return Rng(derive_seed(master_seed, index));
    }

    uint64_t next_u64() {
        return engine_();
    }
    uint64_t sign_bits() {
        return engine_();
    }
    double uniform();
    double normal();
    /// Standard complex normal: real and imaginary parts N(0, 1/2).
    std::complex<double> complex_normal();
    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    uint64_t below(uint64_t bound);

   private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0;
    bool has_cached_normal_ = false;
};

}  // namespace bosonrace

#endif
