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
#include <cmath>
#include <limits>
#include <string>

#include "bosonrace/error.h"

namespace bosonrace {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_aligned(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    if (a.outcomes != b.outcomes || a.probabilities.size() != a.outcomes.size() ||
        b.probabilities.size() != b.outcomes.size()) {
        throw Error(ErrorKind::Alignment, "distributions are defined over different outcome lists");
    }
}

std::vector<double> per_event(const EventStream &events, const OutcomeDistribution &dist) {
    std::vector<double> result;
    result.reserve(events.events.size());
    for (const ModeConfig &event : events.events) {
        result.push_back(dist.probability_of(event));
    }
    return result;
}

}  // namespace

MetricReport metrics(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    require_aligned(p, q);
    MetricReport report;
    for (size_t k = 0; k < p.size(); k++) {
        double pk = p.probabilities[k];
        double qk = q.probabilities[k];
        double sp = std::sqrt(pk);
        double sq = std::sqrt(qk);
        report.similarity += sp * sq;
        report.distance += std::abs(pk - qk);
        report.epsilon = std::max(report.epsilon, std::abs(sp - sq));
    }
    report.distance *= 0.5;
    return report;
}

double posterior_from_log_chi(double log_chi) {
    if (log_chi == kNegInf) {
        return 0;
    }
    // chi / (chi + 1) without overflowing exp for large |log_chi|.
    double p = log_chi >= 0 ? 1 / (1 + std::exp(-log_chi)) : std::exp(log_chi) / (1 + std::exp(log_chi));
    return std::clamp(p, 0.0, 1.0);
}

double BayesianTrace::final_log_chi() const {
    std::vector<double> sorted = log_ratio;
    std::sort(sorted.begin(), sorted.end());
    double total = 0;
    for (double x : sorted) {
        total += x;
    }
    return total;
}

double BayesianTrace::final_posterior() const {
    return posterior_from_log_chi(final_log_chi());
}

std::optional<size_t> BayesianTrace::events_to_posterior(double threshold) const {
    for (size_t k = 0; k < posterior.size(); k++) {
        if (posterior[k] >= threshold) {
            return k + 1;
        }
    }
    return std::nullopt;
}

BayesianTrace bayesian_trace(std::span<const double> q_per_event, std::span<const double> r_per_event) {
    if (q_per_event.size() != r_per_event.size()) {
        throw Error(ErrorKind::Alignment, "hypotheses were evaluated on different numbers of events");
    }
    BayesianTrace trace;
    size_t count = q_per_event.size();
    trace.log_ratio.reserve(count);
    trace.log_chi.reserve(count);
    trace.posterior.reserve(count);
    double log_chi = 0;
    for (size_t k = 0; k < count; k++) {
        double q = q_per_event[k];
        double r = r_per_event[k];
        if (!(r > 0)) {
            throw Error(
                ErrorKind::UndefinedRatio,
                "event " + std::to_string(k) + " has zero probability under the alternative hypothesis");
        }
        double log_ratio = q > 0 ? std::log(q) - std::log(r) : kNegInf;
        log_chi += log_ratio;
        trace.log_ratio.push_back(log_ratio);
        trace.log_chi.push_back(log_chi);
        trace.posterior.push_back(posterior_from_log_chi(log_chi));
    }
    return trace;
}

BayesianTrace bayesian_trace(
    const EventStream &events, const OutcomeDistribution &hyp_q, const OutcomeDistribution &hyp_r) {
    require_aligned(hyp_q, hyp_r);
    return bayesian_trace(per_event(events, hyp_q), per_event(events, hyp_r));
}

int counter_increment(double ratio, const CounterThresholds &t) {
    if (t.a1 < ratio && ratio < 1 / t.a1) {
        return 0;
    }
    if (1 / t.a1 <= ratio && ratio < t.a2) {
        return 1;
    }
    if (ratio >= t.a2) {
        return 2;
    }
    if (1 / t.a2 < ratio && ratio <= t.a1) {
        return -1;
    }
    return -2;
}

std::optional<size_t> CounterTrace::events_to_positive() const {
    for (size_t k = 0; k < counter.size(); k++) {
        if (counter[k] > 0) {
            return k + 1;
        }
    }
    return std::nullopt;
}

CounterTrace counter_trace(
    std::span<const double> p_ind_per_event, std::span<const double> q_dis_per_event, CounterThresholds thresholds) {
    if (!(thresholds.a1 > 0 && thresholds.a1 < 1 && thresholds.a2 > 1)) {
        throw Error(ErrorKind::Domain, "counter thresholds must satisfy 0 < a1 < 1 < a2");
    }
    if (p_ind_per_event.size() != q_dis_per_event.size()) {
        throw Error(ErrorKind::Alignment, "hypotheses were evaluated on different numbers of events");
    }
    CounterTrace trace;
    trace.thresholds = thresholds;
    size_t count = p_ind_per_event.size();
    trace.ratio.reserve(count);
    trace.counter.reserve(count);
    int64_t counter = 0;
    for (size_t k = 0; k < count; k++) {
        double p = p_ind_per_event[k];
        double q = q_dis_per_event[k];
        if (p < 0 || q < 0) {
            throw Error(ErrorKind::Domain, "negative probability at event " + std::to_string(k));
        }
        double ratio;
        if (q > 0) {
            ratio = p / q;
        } else if (p > 0) {
            ratio = std::numeric_limits<double>::infinity();
        } else {
            trace.skipped.push_back(k);
            trace.ratio.push_back(std::numeric_limits<double>::quiet_NaN());
            trace.counter.push_back(counter);
            continue;
        }
        counter += counter_increment(ratio, thresholds);
        trace.ratio.push_back(ratio);
        trace.counter.push_back(counter);
    }
    return trace;
}

CounterTrace counter_trace(
    const EventStream &events,
    const OutcomeDistribution &p_ind,
    const OutcomeDistribution &q_dis,
    CounterThresholds thresholds) {
    require_aligned(p_ind, q_dis);
    return counter_trace(per_event(events, p_ind), per_event(events, q_dis), thresholds);
}

}  // namespace bosonrace
