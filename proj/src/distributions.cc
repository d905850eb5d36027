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

#include "bosonrace/distributions.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bosonrace/error.h"
#include "bosonrace/interferometer.h"
#include "bosonrace/permanent.h"
#include "bosonrace/rng.h"
#include "parallel.h"

namespace bosonrace {

std::string_view to_string(Restriction r) {
    return r == Restriction::Full ? "full" : "no-collision";
}

std::string_view to_string(Model m) {
    switch (m) {
        case Model::Boson:
            return "boson";
        case Model::Distinguishable:
            return "distinguishable";
        case Model::Uniform:
            return "uniform";
    }
    return "unknown";
}

Restriction parse_restriction(std::string_view text) {
    if (text == "full") {
        return Restriction::Full;
    }
    if (text == "no-collision") {
        return Restriction::NoCollision;
    }
    throw Error(ErrorKind::Config, "unknown restriction '" + std::string(text) + "'");
}

Model parse_model(std::string_view text) {
    if (text == "boson") {
        return Model::Boson;
    }
    if (text == "distinguishable") {
        return Model::Distinguishable;
    }
    if (text == "uniform") {
        return Model::Uniform;
    }
    throw Error(ErrorKind::Config, "unknown model '" + std::string(text) + "'");
}

std::optional<size_t> OutcomeDistribution::index_of(const ModeConfig &config) const {
    auto it = std::lower_bound(outcomes.begin(), outcomes.end(), config);
    if (it == outcomes.end() || !(*it == config)) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - outcomes.begin());
}

size_t OutcomeDistribution::require_index(const ModeConfig &config) const {
    auto index = index_of(config);
    if (!index) {
        throw Error(ErrorKind::Membership, "configuration " + config.str() + " is not in the outcome set");
    }
    return *index;
}

namespace {

void require_photons(size_t modes, size_t photons) {
    if (modes == 0 || photons == 0) {
        throw Error(ErrorKind::Domain, "need at least one mode and one photon");
    }
}

// Visits every non-decreasing (repeats allowed) or strictly increasing
// sequence of `photons` mode indices in lexicographic order.
template <typename Visit>
void for_each_mode_list(size_t modes, size_t photons, bool repeats, Visit &&visit) {
    std::vector<size_t> list(photons);
    for (size_t k = 0; k < photons; k++) {
        list[k] = repeats ? 0 : k;
    }
    while (true) {
        visit(std::span<const size_t>(list));
        // Rightmost position that can still advance.
        size_t pos = photons;
        while (pos-- > 0) {
            size_t limit = repeats ? modes - 1 : modes - photons + pos;
            if (list[pos] < limit) {
                break;
            }
        }
        if (pos == static_cast<size_t>(-1)) {
            return;
        }
        list[pos]++;
        for (size_t k = pos + 1; k < photons; k++) {
            list[k] = repeats ? list[pos] : list[k - 1] + 1;
        }
    }
}

void require_input(const ComplexMatrix &u, const ModeConfig &input) {
    require_square(u, "distribution");
    if (input.num_modes() != u.rows()) {
        throw Error(ErrorKind::Config, "input configuration length does not match the unitary");
    }
    if (input.num_photons() == 0) {
        throw Error(ErrorKind::Config, "input configuration has no photons");
    }
}

template <typename Probability>
OutcomeDistribution build_distribution(
    const ComplexMatrix &u, const ModeConfig &input, Restriction restriction, Probability &&probability) {
    require_input(u, input);
    OutcomeDistribution dist;
    dist.modes = u.rows();
    dist.photons = input.num_photons();
    dist.restriction = restriction;
    dist.outcomes = enumerate_outcomes(dist.modes, dist.photons, restriction);
    dist.probabilities.resize(dist.outcomes.size());
    detail::parallel_for(dist.outcomes.size(), [&](size_t k) {
        dist.probabilities[k] = probability(dist.outcomes[k]);
    });

    double mass = 0;
    for (double p : dist.probabilities) {
        mass += p;
    }
    if (restriction == Restriction::NoCollision) {
        if (!(mass > 0)) {
            throw Error(ErrorKind::Domain, "no-collision outcomes have zero total probability");
        }
        for (double &p : dist.probabilities) {
            p /= mass;
        }
        dist.mass = mass;
    } else {
        dist.mass = 1;
    }
    return dist;
}

}  // namespace

std::vector<ModeConfig> enumerate_no_collision(size_t modes, size_t photons) {
    require_photons(modes, photons);
    if (photons > modes) {
        throw Error(ErrorKind::Domain, "collision-free outcomes need n <= m");
    }
    std::vector<ModeConfig> result;
    result.reserve(static_cast<size_t>(binomial(modes, photons)));
    for_each_mode_list(modes, photons, false, [&](std::span<const size_t> list) {
        result.push_back(ModeConfig::from_modes(modes, list));
    });
    return result;
}

std::vector<ModeConfig> enumerate_full(size_t modes, size_t photons) {
    require_photons(modes, photons);
    double count = binomial(modes + photons - 1, photons);
    if (count > kMaxEnumeratedOutcomes) {
        throw Error(
            ErrorKind::SizeLimit, "full outcome set has " + std::to_string(count) + " members, above the limit");
    }
    std::vector<ModeConfig> result;
    result.reserve(static_cast<size_t>(count));
    for_each_mode_list(modes, photons, true, [&](std::span<const size_t> list) {
        result.push_back(ModeConfig::from_modes(modes, list));
    });
    return result;
}

std::vector<ModeConfig> enumerate_outcomes(size_t modes, size_t photons, Restriction restriction) {
    return restriction == Restriction::Full ? enumerate_full(modes, photons) : enumerate_no_collision(modes, photons);
}

double outcome_probability(const ComplexMatrix &u, const ModeConfig &input, const ModeConfig &output) {
    ComplexMatrix sub = scatter_submatrix(u, input, output);
    return std::norm(perm_ryser(sub)) / (input.multiplicity() * output.multiplicity());
}

OutcomeDistribution boson_distribution(const ComplexMatrix &u, const ModeConfig &input, Restriction restriction) {
    return build_distribution(u, input, restriction, [&](const ModeConfig &output) {
        return outcome_probability(u, input, output);
    });
}

OutcomeDistribution distinguishable_distribution(
    const ComplexMatrix &u, const ModeConfig &input, Restriction restriction) {
    return build_distribution(u, input, restriction, [&](const ModeConfig &output) {
        ComplexMatrix sub = scatter_submatrix(u, input, output);
        std::vector<Complex> weights(sub.entries().size());
        std::transform(sub.entries().begin(), sub.entries().end(), weights.begin(), [](Complex z) {
            return Complex(std::norm(z));
        });
        ComplexMatrix weight_matrix(sub.rows(), sub.cols(), std::move(weights));
        return perm_ryser(weight_matrix).real() / output.multiplicity();
    });
}

OutcomeDistribution uniform_distribution(std::vector<ModeConfig> outcomes) {
    if (outcomes.empty()) {
        throw Error(ErrorKind::Domain, "uniform distribution over an empty outcome set");
    }
    OutcomeDistribution dist;
    dist.modes = outcomes.front().num_modes();
    dist.photons = outcomes.front().num_photons();
    bool collision_free = std::all_of(outcomes.begin(), outcomes.end(), [](const ModeConfig &c) {
        return c.is_collision_free();
    });
    dist.restriction = collision_free ? Restriction::NoCollision : Restriction::Full;
    dist.probabilities.assign(outcomes.size(), 1.0 / static_cast<double>(outcomes.size()));
    dist.outcomes = std::move(outcomes);
    return dist;
}

OutcomeDistribution model_distribution(
    Model model, const ComplexMatrix &u, const ModeConfig &input, Restriction restriction) {
    switch (model) {
        case Model::Boson:
            return boson_distribution(u, input, restriction);
        case Model::Distinguishable:
            return distinguishable_distribution(u, input, restriction);
        case Model::Uniform:
            require_input(u, input);
            return uniform_distribution(enumerate_outcomes(u.rows(), input.num_photons(), restriction));
    }
    throw Error(ErrorKind::Config, "unknown model");
}

EventStream draw_samples(const OutcomeDistribution &dist, size_t count, uint64_t seed, std::string source) {
    if (count == 0) {
        throw Error(ErrorKind::Domain, "draw_samples requires count >= 1");
    }
    if (dist.outcomes.empty() || dist.outcomes.size() != dist.probabilities.size()) {
        throw Error(ErrorKind::Domain, "cannot sample from an empty or malformed distribution");
    }
    std::vector<double> cumulative(dist.probabilities.size());
    std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(), cumulative.begin());

    Rng rng(seed);
    EventStream stream{.events = {}, .source = std::move(source), .seed = seed};
    stream.events.reserve(count);
    for (size_t k = 0; k < count; k++) {
        double u = rng.uniform();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        size_t index = std::min<size_t>(it - cumulative.begin(), cumulative.size() - 1);
        stream.events.push_back(dist.outcomes[index]);
    }
    return stream;
}

OutcomeDistribution empirical_frequencies(const EventStream &events, std::vector<ModeConfig> outcome_set) {
    OutcomeDistribution dist = uniform_distribution(std::move(outcome_set));
    for (size_t k = 1; k < dist.outcomes.size(); k++) {
        if (!(dist.outcomes[k - 1] < dist.outcomes[k])) {
            throw Error(ErrorKind::Alignment, "outcome set must be sorted and duplicate-free");
        }
    }
    if (events.events.empty()) {
        throw Error(ErrorKind::Domain, "empirical frequencies of an empty event stream");
    }
    std::vector<uint64_t> counts(dist.size());
    for (const ModeConfig &event : events.events) {
        counts[dist.require_index(event)]++;
    }
    double total = static_cast<double>(events.events.size());
    for (size_t k = 0; k < counts.size(); k++) {
        dist.probabilities[k] = static_cast<double>(counts[k]) / total;
    }
    return dist;
}

}  // namespace bosonrace
