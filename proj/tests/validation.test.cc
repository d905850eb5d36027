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

#include "bosonrace/validation.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gtest/gtest.h"

#include "bosonrace/interferometer.h"
#include "test_util.h"

using namespace bosonrace;

namespace {

OutcomeDistribution two_point(double a, double b) {
    OutcomeDistribution d;
    d.modes = 2;
    d.photons = 1;
    d.restriction = Restriction::NoCollision;
    d.outcomes = {ModeConfig({1, 0}), ModeConfig({0, 1})};
    d.probabilities = {a, b};
    return d;
}

OutcomeDistribution random_distribution(const std::vector<ModeConfig> &outcomes, Rng &rng) {
    OutcomeDistribution d = uniform_distribution(outcomes);
    double sum = 0;
    for (double &p : d.probabilities) {
        // Occasional exact zeros exercise disjoint supports.
        p = rng.uniform() < 0.1 ? 0.0 : -std::log(1 - rng.uniform());
        sum += p;
    }
    if (sum == 0) {
        d.probabilities[0] = sum = 1;
    }
    for (double &p : d.probabilities) {
        p /= sum;
    }
    return d;
}

struct HaarSetup {
    OutcomeDistribution boson;
    OutcomeDistribution distinguishable;
    OutcomeDistribution uniform;
};

HaarSetup haar_setup(uint64_t seed) {
    auto u = haar_unitary(9, seed);
    auto input = ModeConfig::first_modes(9, 3);
    return HaarSetup{
        boson_distribution(u, input, Restriction::NoCollision),
        distinguishable_distribution(u, input, Restriction::NoCollision),
        uniform_distribution(enumerate_no_collision(9, 3)),
    };
}

}  // namespace

TEST(metrics, identical_and_disjoint) {
    auto same = metrics(two_point(0.3, 0.7), two_point(0.3, 0.7));
    EXPECT_NEAR(same.similarity, 1.0, 1e-15);
    EXPECT_EQ(same.distance, 0);
    EXPECT_EQ(same.epsilon, 0);

    auto disjoint = metrics(two_point(1, 0), two_point(0, 1));
    EXPECT_EQ(disjoint.similarity, 0);
    EXPECT_EQ(disjoint.distance, 1);
    EXPECT_EQ(disjoint.epsilon, 1);
}

TEST(metrics, misaligned_sets) {
    auto a = uniform_distribution(enumerate_no_collision(4, 2));
    auto b = uniform_distribution(enumerate_no_collision(5, 2));
    EXPECT_ERROR_KIND(metrics(a, b), ErrorKind::Alignment);
}

TEST(metrics, bhattacharyya_total_variation_inequality_and_symmetry) {
    Rng rng(55);
    auto outcomes = enumerate_no_collision(6, 3);
    for (int trial = 0; trial < 1000; trial++) {
        auto p = random_distribution(outcomes, rng);
        auto q = random_distribution(outcomes, rng);
        auto pq = metrics(p, q);
        auto qp = metrics(q, p);
        ASSERT_LE(1 - pq.similarity, pq.distance + 1e-12);
        ASSERT_LE(pq.distance, std::sqrt(std::max(0.0, 1 - pq.similarity * pq.similarity)) + 1e-12);
        ASSERT_EQ(pq.similarity, qp.similarity);
        ASSERT_EQ(pq.distance, qp.distance);
        ASSERT_EQ(pq.epsilon, qp.epsilon);
    }
}

TEST(bayesian_trace, equal_hypotheses_give_half) {
    auto d = two_point(0.4, 0.6);
    EventStream events{.events = {ModeConfig({1, 0})}, .source = "test", .seed = 0};
    auto trace = bayesian_trace(events, d, d);
    ASSERT_EQ(trace.size(), 1u);
    EXPECT_EQ(trace.log_chi[0], 0);
    EXPECT_EQ(trace.posterior[0], 0.5);
}

TEST(bayesian_trace, posterior_follows_chi) {
    std::vector<double> q = {0.2, 0.05, 0.3};
    std::vector<double> r = {0.1, 0.1, 0.1};
    auto trace = bayesian_trace(q, r);
    double chi = 1;
    for (size_t k = 0; k < 3; k++) {
        chi *= q[k] / r[k];
        EXPECT_NEAR(trace.log_chi[k], std::log(chi), 1e-14);
        EXPECT_NEAR(trace.posterior[k], chi / (chi + 1), 1e-14);
    }
}

TEST(bayesian_trace, zero_q_pins_posterior_to_zero) {
    std::vector<double> q = {0.5, 0.0, 0.9};
    std::vector<double> r = {0.1, 0.1, 0.1};
    auto trace = bayesian_trace(q, r);
    EXPECT_EQ(trace.log_chi[1], -std::numeric_limits<double>::infinity());
    EXPECT_EQ(trace.posterior[1], 0);
    EXPECT_EQ(trace.posterior[2], 0);
    EXPECT_EQ(trace.final_posterior(), 0);
}

TEST(bayesian_trace, zero_r_is_undefined) {
    std::vector<double> q = {0.5};
    std::vector<double> r = {0.0};
    EXPECT_ERROR_KIND(bayesian_trace(q, r), ErrorKind::UndefinedRatio);
}

TEST(bayesian_trace, survives_long_streams) {
    std::vector<double> q(50000, 1e-3);
    std::vector<double> r(50000, 1e-2);
    auto trace = bayesian_trace(q, r);
    EXPECT_NEAR(trace.log_chi.back(), 50000 * std::log(0.1), 1e-6);
    EXPECT_EQ(trace.posterior.back(), 0);
    EXPECT_EQ(posterior_from_log_chi(800), 1);
}

TEST(bayesian_trace, final_posterior_is_order_invariant) {
    auto setup = haar_setup(3);
    auto events = draw_samples(setup.boson, 300, 4);
    auto forward = bayesian_trace(events, setup.boson, setup.uniform);
    Rng rng(5);
    for (int shuffle = 0; shuffle < 10; shuffle++) {
        auto shuffled = events;
        for (size_t k = shuffled.events.size() - 1; k > 0; k--) {
            std::swap(shuffled.events[k], shuffled.events[rng.below(k + 1)]);
        }
        auto trace = bayesian_trace(shuffled, setup.boson, setup.uniform);
        EXPECT_EQ(trace.final_log_chi(), forward.final_log_chi());
        EXPECT_EQ(trace.final_posterior(), forward.final_posterior());
    }
}

TEST(bayesian_trace, likelihood_ratio_is_a_martingale_under_alternative) {
    auto setup = haar_setup(8);
    auto events = draw_samples(setup.uniform, 100000, 9);
    std::vector<double> ratios;
    for (const auto &e : events.events) {
        ratios.push_back(setup.boson.probability_of(e) / setup.uniform.probability_of(e));
    }
    double mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
    double var = 0;
    for (double x : ratios) {
        var += (x - mean) * (x - mean);
    }
    double se = std::sqrt(var / (ratios.size() - 1) / ratios.size());
    EXPECT_NEAR(mean, 1.0, 3 * se);
}

TEST(bayesian_trace, boson_data_beats_uniform_quickly) {
    std::vector<size_t> needed;
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto setup = haar_setup(derive_seed(seed, 0));
        auto events = draw_samples(setup.boson, 1000, derive_seed(seed, 1));
        auto trace = bayesian_trace(events, setup.boson, setup.uniform);
        needed.push_back(trace.events_to_posterior(0.998).value_or(100000));
    }
    std::nth_element(needed.begin(), needed.begin() + 50, needed.end());
    EXPECT_LE(needed[50], 30u);
}

TEST(bayesian_trace, uniform_data_is_rejected) {
    int rejected = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto setup = haar_setup(derive_seed(seed, 0));
        auto events = draw_samples(setup.uniform, 200, derive_seed(seed, 2));
        auto trace = bayesian_trace(events, setup.boson, setup.uniform);
        rejected += std::any_of(trace.posterior.begin(), trace.posterior.end(), [](double p) {
            return p <= 0.01;
        });
    }
    EXPECT_GE(rejected, 95);
}

TEST(counter_increment, bands_and_boundaries) {
    CounterThresholds t{0.85, 1.8};
    EXPECT_EQ(counter_increment(1.0, t), 0);
    EXPECT_EQ(counter_increment(0.9, t), 0);
    EXPECT_EQ(counter_increment(1 / 0.85, t), 1);
    EXPECT_EQ(counter_increment(1.5, t), 1);
    EXPECT_EQ(counter_increment(1.8, t), 2);
    EXPECT_EQ(counter_increment(40, t), 2);
    EXPECT_EQ(counter_increment(std::numeric_limits<double>::infinity(), t), 2);
    EXPECT_EQ(counter_increment(0.85, t), -1);
    EXPECT_EQ(counter_increment(0.6, t), -1);
    EXPECT_EQ(counter_increment(1 / 1.8, t), -2);
    EXPECT_EQ(counter_increment(0.1, t), -2);
    EXPECT_EQ(counter_increment(0.0, t), -2);
}

TEST(counter_increment, tiling_is_monotone) {
    CounterThresholds t{0.85, 1.8};
    int previous = -2;
    for (double x = 0; x < 5; x += 1e-4) {
        int inc = counter_increment(x, t);
        ASSERT_GE(inc, previous) << x;
        previous = inc;
    }
}

TEST(counter_trace, dead_band_keeps_counter_at_zero) {
    std::vector<double> p(40, 0.25);
    auto trace = counter_trace(p, p);
    EXPECT_EQ(trace.final_counter(), 0);
    EXPECT_FALSE(trace.indistinguishable());
    EXPECT_FALSE(trace.events_to_positive().has_value());
}

TEST(counter_trace, zero_probabilities) {
    std::vector<double> p = {0.3, 0.0, 0.0};
    std::vector<double> q = {0.0, 0.0, 0.2};
    auto trace = counter_trace(p, q);
    EXPECT_EQ(trace.counter, (std::vector<int64_t>{2, 2, 0}));
    EXPECT_EQ(trace.skipped, (std::vector<size_t>{1}));
    EXPECT_TRUE(std::isnan(trace.ratio[1]));
}

TEST(counter_trace, threshold_validation) {
    std::vector<double> p = {0.3};
    EXPECT_ERROR_KIND(counter_trace(p, p, {1.2, 1.8}), ErrorKind::Domain);
    EXPECT_ERROR_KIND(counter_trace(p, p, {0.85, 0.9}), ErrorKind::Domain);
    std::vector<double> shorter;
    EXPECT_ERROR_KIND(counter_trace(p, shorter), ErrorKind::Alignment);
}

TEST(counter_trace, verdict_invariant_under_common_scaling) {
    auto setup = haar_setup(12);
    Rng rng(13);
    for (int trial = 0; trial < 20; trial++) {
        auto events = draw_samples(trial % 2 ? setup.boson : setup.distinguishable, 200, rng.next_u64());
        std::vector<double> p, q, ps, qs;
        for (const auto &e : events.events) {
            double c = std::exp(4 * (rng.uniform() - 0.5));
            p.push_back(setup.boson.probability_of(e));
            q.push_back(setup.distinguishable.probability_of(e));
            ps.push_back(c * p.back());
            qs.push_back(c * q.back());
        }
        auto plain = counter_trace(p, q);
        auto scaled = counter_trace(ps, qs);
        EXPECT_EQ(plain.indistinguishable(), scaled.indistinguishable());
        EXPECT_EQ(plain.final_counter(), scaled.final_counter());
    }
}

TEST(counter_trace, separates_boson_from_distinguishable) {
    int boson_positive = 0;
    int dist_negative = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto setup = haar_setup(derive_seed(seed, 0));
        auto boson_events = draw_samples(setup.boson, 100, derive_seed(seed, 3));
        auto dist_events = draw_samples(setup.distinguishable, 100, derive_seed(seed, 4));
        boson_positive += counter_trace(boson_events, setup.boson, setup.distinguishable).final_counter() > 0;
        dist_negative += counter_trace(dist_events, setup.boson, setup.distinguishable).final_counter() < 0;
    }
    EXPECT_GE(boson_positive, 95);
    EXPECT_GE(dist_negative, 95);
}
