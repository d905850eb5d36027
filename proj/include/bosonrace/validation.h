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

#ifndef BOSONRACE_VALIDATION_H
#define BOSONRACE_VALIDATION_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bosonrace/distributions.h"

namespace bosonrace {

struct MetricReport {
    /// Bhattacharyya coefficient sum_i sqrt(p_i q_i).
    double similarity = 0;
    /// Total variation distance (1/2) sum_i |p_i - q_i|.
    double distance = 0;
    /// max_i |sqrt(p_i) - sqrt(q_i)|.
    double epsilon = 0;
};

/// Throws ErrorKind::Alignment unless both distributions list the same
/// outcomes in the same order.
MetricReport metrics(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Running posterior of hypothesis Q against R, with equal priors.
///
/// log_chi[k] is the sum of log(q_x / r_x) over events 0..k, accumulated in
/// stream order. posterior[k] = chi / (chi + 1). An event with q_x = 0 pins
/// log_chi at -infinity from then on.
struct BayesianTrace {
    std::vector<double> log_ratio;
    std::vector<double> log_chi;
    std::vector<double> posterior;

    size_t size() const noexcept {
        return posterior.size();
    }
    /// Sum of log_ratio in sorted order, so it does not depend on event order.
    double final_log_chi() const;
    double final_posterior() const;
    /// 1-based index of the first event whose posterior reaches `threshold`.
    std::optional<size_t> events_to_posterior(double threshold) const;
};

double posterior_from_log_chi(double log_chi);

BayesianTrace bayesian_trace(
    const EventStream &events, const OutcomeDistribution &hyp_q, const OutcomeDistribution &hyp_r);

/// Same fold over per-event probabilities. Throws ErrorKind::UndefinedRatio
/// when some r_x = 0.
BayesianTrace bayesian_trace(std::span<const double> q_per_event, std::span<const double> r_per_event);

struct CounterThresholds {
    double a1 = 0.85;
    double a2 = 1.8;
};

/// Banded counter update for likelihood ratio L, first match wins:
///   a1 < L < 1/a1      ->  0
///   1/a1 <= L < a2     -> +1
///   L >= a2            -> +2
///   1/a2 < L <= a1     -> -1
///   L <= 1/a2          -> -2
int counter_increment(double ratio, const CounterThresholds &thresholds);

struct CounterTrace {
    CounterThresholds thresholds;
    /// p_ind / q_dis per event; NaN for skipped events.
    std::vector<double> ratio;
    /// Counter value after each event.
    std::vector<int64_t> counter;
    /// 0-based indices of events where both probabilities were zero.
    std::vector<size_t> skipped;

    size_t size() const noexcept {
        return counter.size();
    }
    int64_t final_counter() const {
        return counter.empty() ? 0 : counter.back();
    }
    /// True when the data favour indistinguishable photons (counter > 0).
    bool indistinguishable() const {
        return final_counter() > 0;
    }
    /// 1-based index of the first event after which the counter is positive.
    std::optional<size_t> events_to_positive() const;
};

CounterTrace counter_trace(
    const EventStream &events,
    const OutcomeDistribution &p_ind,
    const OutcomeDistribution &q_dis,
    CounterThresholds thresholds = {});

CounterTrace counter_trace(
    std::span<const double> p_ind_per_event, std::span<const double> q_dis_per_event, CounterThresholds thresholds = {});

}  // namespace bosonrace

#endif
