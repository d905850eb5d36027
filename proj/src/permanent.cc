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

#include "bosonrace/permanent.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "bosonrace/error.h"
#include "bosonrace/rng.h"
#include "parallel.h"

namespace bosonrace {

namespace {

void require_at_most(size_t n, size_t limit, const char *what) {
    if (n > limit) {
        throw Error(
            ErrorKind::SizeLimit,
            std::string(what) + " is limited to n <= " + std::to_string(limit) + ", got n = " + std::to_string(n));
    }
}

// Running statistics of a complex sample, merged with Chan's pairwise update.
struct ComplexMoments {
    uint64_t count = 0;
    Complex mean{};
    double sum_sq_dev = 0;  // sum of |x - mean|^2

    void add(Complex x) {
        count++;
        Complex delta = x - mean;
        mean += delta / static_cast<double>(count);
        sum_sq_dev += std::real(delta * std::conj(x - mean));
    }

    void merge(const ComplexMoments &other) {
        if (other.count == 0) {
            return;
        }
        if (count == 0) {
            *this = other;
            return;
        }
        double na = static_cast<double>(count);
        double nb = static_cast<double>(other.count);
        double total = na + nb;
        Complex delta = other.mean - mean;
        mean += delta * (nb / total);
        sum_sq_dev += other.sum_sq_dev + std::norm(delta) * na * nb / total;
        count += other.count;
    }
};

}  // namespace

Complex perm_naive(const ComplexMatrix &m) {
    require_square(m, "perm_naive");
    size_t n = m.rows();
    require_at_most(n, kNaivePermanentMaxSize, "perm_naive");

    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Complex total = 0;
    do {
        Complex product = 1;
        for (size_t i = 0; i < n; i++) {
            product *= m(i, sigma[i]);
        }
        total += product;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Complex perm_ryser(const ComplexMatrix &m) {
    require_square(m, "perm_ryser");
    size_t n = m.rows();
    require_at_most(n, kRyserMaxSize, "perm_ryser");

    std::vector<Complex> row_sums(n);
    Complex total = 0;
    uint64_t num_subsets = uint64_t{1} << n;
    for (uint64_t k = 1; k < num_subsets; k++) {
        // Gray code g(k) = k ^ (k >> 1) differs from g(k - 1) in bit ctz(k).
        unsigned col = static_cast<unsigned>(std::countr_zero(k));
        uint64_t gray = k ^ (k >> 1);
        if ((gray >> col) & 1) {
            for (size_t i = 0; i < n; i++) {
                row_sums[i] += m(i, col);
            }
        } else {
            for (size_t i = 0; i < n; i++) {
                row_sums[i] -= m(i, col);
            }
        }
        Complex product = row_sums[0];
        for (size_t i = 1; i < n; i++) {
            product *= row_sums[i];
        }
        // Term sign is (-1)^(n - |S|).
        if ((n - static_cast<size_t>(std::popcount(gray))) & 1) {
            total -= product;
        } else {
            total += product;
        }
    }
    return total;
}

OpCount ryser_op_counts(size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::Domain, "ryser_op_counts requires n >= 2");
    }
    require_at_most(n, 62, "ryser_op_counts");
    uint64_t subsets = uint64_t{1} << n;
    return OpCount{
        .multiplications = (subsets - 1) * (n - 1),
        .additions = (subsets - 2) * (n + 1),
    };
}

PermanentEstimate gurvits_estimate(const ComplexMatrix &m, uint64_t num_samples, uint64_t seed) {
    require_square(m, "gurvits_estimate");
    if (num_samples == 0) {
        throw Error(ErrorKind::Domain, "gurvits_estimate requires num_samples >= 1");
    }
    size_t n = m.rows();
    uint64_t num_partitions = (num_samples + kGurvitsSamplesPerPartition - 1) / kGurvitsSamplesPerPartition;
    std::vector<ComplexMoments> partials(num_partitions);

    detail::parallel_for(
        num_partitions,
        [&](size_t part) {
            uint64_t begin = part * kGurvitsSamplesPerPartition;
            uint64_t end = std::min(num_samples, begin + kGurvitsSamplesPerPartition);
            Rng rng = Rng::split(seed, part);
            std::vector<bool> negative(n);
            ComplexMoments moments;
            for (uint64_t s = begin; s < end; s++) {
                bool odd = false;
                uint64_t bits = 0;
                for (size_t j = 0; j < n; j++) {
                    if (j % 64 == 0) {
                        bits = rng.sign_bits();
                    }
                    negative[j] = (bits >> (j % 64)) & 1;
                    odd ^= negative[j];
                }
                Complex product = 1;
                for (size_t i = 0; i < n; i++) {
                    Complex row_sum = 0;
                    for (size_t j = 0; j < n; j++) {
                        row_sum += negative[j] ? -m(i, j) : m(i, j);
                    }
                    product *= row_sum;
                }
                moments.add(odd ? -product : product);
            }
            partials[part] = moments;
        },
        1);

    ComplexMoments total;
    for (const auto &p : partials) {
        total.merge(p);
    }
    double std_error = 0;
    if (total.count > 1) {
        double variance = total.sum_sq_dev / static_cast<double>(total.count - 1);
        std_error = std::sqrt(variance / static_cast<double>(total.count));
    }
    return PermanentEstimate{.mean = total.mean, .std_error = std_error, .num_samples = total.count};
}

Complex gurvits_exhaustive(const ComplexMatrix &m) {
    require_square(m, "gurvits_exhaustive");
    size_t n = m.rows();
    require_at_most(n, kExhaustiveGurvitsMaxSize, "gurvits_exhaustive");

    uint64_t num_patterns = uint64_t{1} << n;
    Complex total = 0;
    for (uint64_t pattern = 0; pattern < num_patterns; pattern++) {
        Complex product = 1;
        for (size_t i = 0; i < n; i++) {
            Complex row_sum = 0;
            for (size_t j = 0; j < n; j++) {
                row_sum += ((pattern >> j) & 1) ? -m(i, j) : m(i, j);
            }
            product *= row_sum;
        }
        total += (std::popcount(pattern) & 1) ? -product : product;
    }
    return total / static_cast<double>(num_patterns);
}

}  // namespace bosonrace
