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

#ifndef BOSONRACE_DISTRIBUTIONS_H
#define BOSONRACE_DISTRIBUTIONS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bosonrace/complex_matrix.h"
#include "bosonrace/mode_config.h"

namespace bosonrace {

/// Upper bound on the number of outcomes enumerate_full will produce.
inline constexpr double kMaxEnumeratedOutcomes = 1e7;

enum class Restriction { Full, NoCollision };
enum class Model { Boson, Distinguishable, Uniform };

std::string_view to_string(Restriction r);
std::string_view to_string(Model m);
Restriction parse_restriction(std::string_view text);
Model parse_model(std::string_view text);

/// Probabilities over a sorted, duplicate-free outcome set.
struct OutcomeDistribution {
    size_t modes = 0;
    size_t photons = 0;
    Restriction restriction = Restriction::Full;
    std::vector<ModeConfig> outcomes;
    std::vector<double> probabilities;
    /// Probability mass the generating model assigns to the outcome set
    /// before renormalization. 1 for full distributions.
    double mass = 1;

    size_t size() const noexcept {
        return outcomes.size();
    }
    std::optional<size_t> index_of(const ModeConfig &config) const;
    /// Throws ErrorKind::Membership for configurations outside the set.
    size_t require_index(const ModeConfig &config) const;
    double probability_of(const ModeConfig &config) const {
        return probabilities[require_index(config)];
    }
};

struct EventStream {
    std::vector<ModeConfig> events;
    std::string source;
    uint64_t seed = 0;
};

/// All C(m, n) collision-free configurations in outcome order.
std::vector<ModeConfig> enumerate_no_collision(size_t modes, size_t photons);
/// All C(m+n-1, n) configurations in outcome order.
std::vector<ModeConfig> enumerate_full(size_t modes, size_t photons);
std::vector<ModeConfig> enumerate_outcomes(size_t modes, size_t photons, Restriction restriction);

/// |perm(scatter_submatrix)|^2 / (prod input_j! * prod output_i!).
double outcome_probability(const ComplexMatrix &u, const ModeConfig &input, const ModeConfig &output);

/// Indistinguishable photons. Full: probabilities as computed, which sum to 1
/// for unitary u. No-collision: restricted and renormalized, with the
/// pre-normalization mass kept in `mass`.
OutcomeDistribution boson_distribution(const ComplexMatrix &u, const ModeConfig &input, Restriction restriction);

/// Classical particles: perm(|scatter_submatrix|^2 elementwise) / prod output_i!.
/// Same normalization contract as boson_distribution.
OutcomeDistribution distinguishable_distribution(
    const ComplexMatrix &u, const ModeConfig &input, Restriction restriction);

/// Equal weight on each outcome. The restriction tag is NoCollision when
/// every outcome is collision-free.
OutcomeDistribution uniform_distribution(std::vector<ModeConfig> outcomes);

OutcomeDistribution model_distribution(
    Model model, const ComplexMatrix &u, const ModeConfig &input, Restriction restriction);

/// Inverse-CDF sampling. The last bucket absorbs any rounding residue of the
/// cumulative sum. Draw k uses the k-th uniform of Rng(seed).
EventStream draw_samples(const OutcomeDistribution &dist, size_t count, uint64_t seed, std::string source = "");

/// Relative frequencies over `outcome_set`, zero for unseen outcomes.
OutcomeDistribution empirical_frequencies(const EventStream &events, std::vector<ModeConfig> outcome_set);

}  // namespace bosonrace

#endif
