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

#ifndef BOSONRACE_PERMANENT_H
#define BOSONRACE_PERMANENT_H

#include <cstddef>
#include <cstdint>

#include "bosonrace/complex_matrix.h"

namespace bosonrace {

/// Largest size accepted by perm_naive (n! products).
inline constexpr size_t kNaivePermanentMaxSize = 9;
/// Largest size accepted by gurvits_exhaustive (2^n sign patterns).
inline constexpr size_t kExhaustiveGurvitsMaxSize = 20;
/// Largest size accepted by perm_ryser.
inline constexpr size_t kRyserMaxSize = 30;
/// Samples per independently seeded Monte Carlo partition.
inline constexpr uint64_t kGurvitsSamplesPerPartition = 4096;

struct OpCount {
    uint64_t multiplications = 0;
    uint64_t additions = 0;

    bool operator==(const OpCount &) const = default;
};

struct PermanentEstimate {
    Complex mean;
    /// Sample standard deviation of the per-sample estimates over sqrt(num_samples).
    double std_error = 0;
    uint64_t num_samples = 0;
};

/// Sum over all n! permutations. Reference implementation for tests.
Complex perm_naive(const ComplexMatrix &m);

/// Ryser's inclusion-exclusion formula with subsets visited in Gray-code
/// order, so each step adds or subtracts one column from the running row
/// sums.
Complex perm_ryser(const ComplexMatrix &m);

/// Closed-form arithmetic cost of Ryser's formula on an n x n matrix:
/// (2^n - 1)(n - 1) multiplications and (2^n - 2)(n + 1) additions.
OpCount ryser_op_counts(size_t n);

/// Unbiased randomized estimator: for a uniformly random x in {-1,+1}^n the
/// quantity (prod_j x_j) * prod_i (sum_j x_j m[i,j]) has expectation perm(m).
///
/// Samples are split into partitions of kGurvitsSamplesPerPartition. Partition
/// k draws its signs from Rng::split(seed, k), and partial statistics are
/// merged in partition order, so the estimate is bit-identical for a given
/// seed regardless of how many threads run.
PermanentEstimate gurvits_estimate(const ComplexMatrix &m, uint64_t num_samples, uint64_t seed);

/// Average of the estimator over all 2^n sign patterns. Equals the permanent
/// identically; used as an oracle.
Complex gurvits_exhaustive(const ComplexMatrix &m);

}  // namespace bosonrace

#endif
