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
#include <numeric>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace bosonrace;
using bosonrace::testing::random_complex_matrix;
using bosonrace::testing::relative_error;

namespace {

ComplexMatrix all_ones(size_t n) {
    return ComplexMatrix(n, n, std::vector<Complex>(n * n, 1.0));
}

}  // namespace

TEST(perm_naive, small_examples) {
    EXPECT_EQ(perm_naive(ComplexMatrix::identity(3)), Complex(1));
    EXPECT_EQ(perm_naive(all_ones(3)), Complex(6));
    EXPECT_EQ(perm_naive(ComplexMatrix(2, 2, {1, 2, 3, 4})), Complex(10));
}

TEST(perm_naive, errors) {
    EXPECT_ERROR_KIND(perm_naive(ComplexMatrix(2, 3)), ErrorKind::Dimension);
    EXPECT_ERROR_KIND(perm_naive(ComplexMatrix::identity(10)), ErrorKind::SizeLimit);
}

TEST(perm_ryser, small_examples) {
    EXPECT_EQ(perm_ryser(ComplexMatrix::identity(4)), Complex(1));
    EXPECT_EQ(perm_ryser(all_ones(4)), Complex(24));
    EXPECT_EQ(perm_ryser(ComplexMatrix(2, 2, {1, 2, 3, 4})), Complex(10));
    EXPECT_EQ(perm_ryser(ComplexMatrix(1, 1, {Complex(2, -3)})), Complex(2, -3));
}

TEST(perm_ryser, matches_naive_on_seeded_6x6) {
    Rng rng(6);
    auto m = random_complex_matrix(6, rng);
    EXPECT_LE(relative_error(perm_ryser(m), perm_naive(m)), 1e-9);
}

TEST(perm_ryser, errors) {
    EXPECT_ERROR_KIND(perm_ryser(ComplexMatrix(3, 2)), ErrorKind::Dimension);
    EXPECT_ERROR_KIND(perm_ryser(ComplexMatrix::identity(31)), ErrorKind::SizeLimit);
}

TEST(perm_ryser, oracle_equivalence_property) {
    Rng rng(1000);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 2 + trial % 6;
        auto m = random_complex_matrix(n, rng);
        ASSERT_LE(relative_error(perm_ryser(m), perm_naive(m)), 1e-9) << "trial " << trial << " n " << n;
    }
}

TEST(perm_ryser, row_and_column_permutation_invariance) {
    Rng rng(17);
    for (size_t n = 2; n <= 7; n++) {
        auto m = random_complex_matrix(n, rng);
        Complex base = perm_ryser(m);
        std::vector<size_t> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        for (int shuffle = 0; shuffle < 5; shuffle++) {
            for (size_t k = n - 1; k > 0; k--) {
                std::swap(rows[k], rows[rng.below(k + 1)]);
                std::swap(cols[k], cols[rng.below(k + 1)]);
            }
            ComplexMatrix permuted(n, n);
            for (size_t r = 0; r < n; r++) {
                for (size_t c = 0; c < n; c++) {
                    permuted(r, c) = m(rows[r], cols[c]);
                }
            }
            EXPECT_LE(std::abs(perm_ryser(permuted) - base) / std::abs(base), 1e-12);
        }
    }
}

TEST(perm_ryser, row_scaling_law) {
    Rng rng(23);
    for (size_t n = 2; n <= 7; n++) {
        auto m = random_complex_matrix(n, rng);
        Complex c(0.7, -1.3);
        Complex base = perm_ryser(m);
        size_t row = rng.below(n);
        for (size_t col = 0; col < n; col++) {
            m(row, col) *= c;
        }
        EXPECT_LE(std::abs(perm_ryser(m) - c * base) / std::abs(c * base), 1e-12);
    }
}

TEST(ryser_op_counts, closed_form) {
    EXPECT_EQ(ryser_op_counts(3), (OpCount{14, 24}));
    EXPECT_EQ(ryser_op_counts(4), (OpCount{45, 70}));
    EXPECT_EQ(ryser_op_counts(5), (OpCount{124, 180}));
    EXPECT_EQ(ryser_op_counts(2), (OpCount{3, 6}));
    EXPECT_ERROR_KIND(ryser_op_counts(1), ErrorKind::Domain);
    EXPECT_ERROR_KIND(ryser_op_counts(0), ErrorKind::Domain);
}

TEST(gurvits_estimate, single_entry_is_exact) {
    Complex c(0.3, -2.5);
    ComplexMatrix m(1, 1, {c});
    for (uint64_t samples : {1, 7, 1000, 10000}) {
        auto est = gurvits_estimate(m, samples, 5);
        EXPECT_EQ(est.mean, c);
        EXPECT_EQ(est.num_samples, samples);
        EXPECT_EQ(est.std_error, 0);
    }
}

TEST(gurvits_estimate, deterministic_per_seed) {
    Rng rng(3);
    auto m = random_complex_matrix(5, rng);
    auto a = gurvits_estimate(m, 10000, 99);
    auto b = gurvits_estimate(m, 10000, 99);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    auto c = gurvits_estimate(m, 10000, 100);
    EXPECT_NE(a.mean, c.mean);
}

TEST(gurvits_estimate, partition_merge_matches_direct_statistics) {
    Rng rng(8);
    size_t n = 4;
    auto m = random_complex_matrix(n, rng);
    uint64_t samples = 2 * kGurvitsSamplesPerPartition + 37;
    uint64_t seed = 1234;

    // Replay the documented sign stream and compute the statistics directly.
    std::vector<Complex> values;
    for (uint64_t part = 0; part * kGurvitsSamplesPerPartition < samples; part++) {
        Rng signs = Rng::split(seed, part);
        uint64_t end = std::min(samples, (part + 1) * kGurvitsSamplesPerPartition);
        for (uint64_t s = part * kGurvitsSamplesPerPartition; s < end; s++) {
            uint64_t bits = signs.sign_bits();
            Complex product = 1;
            for (size_t i = 0; i < n; i++) {
                Complex row = 0;
                for (size_t j = 0; j < n; j++) {
                    row += ((bits >> j) & 1) ? -m(i, j) : m(i, j);
                }
                product *= row;
            }
            if (std::popcount(bits & ((uint64_t{1} << n) - 1)) & 1) {
                product = -product;
            }
            values.push_back(product);
        }
    }
    Complex mean = std::accumulate(values.begin(), values.end(), Complex(0)) / static_cast<double>(values.size());
    double ss = 0;
    for (Complex v : values) {
        ss += std::norm(v - mean);
    }
    double std_error = std::sqrt(ss / (values.size() - 1) / values.size());

    auto est = gurvits_estimate(m, samples, seed);
    EXPECT_EQ(est.num_samples, samples);
    EXPECT_LE(std::abs(est.mean - mean), 1e-12 * std::max(1.0, std::abs(mean)));
    EXPECT_NEAR(est.std_error, std_error, 1e-12 * std_error);
}

TEST(gurvits_estimate, std_error_scales_as_inverse_sqrt_samples) {
    Rng rng(77);
    auto m = random_complex_matrix(5, rng);
    auto coarse = gurvits_estimate(m, 100, 1);
    auto fine = gurvits_estimate(m, 10000, 1);
    // Expected ratio is sqrt(100) = 10.
    double ratio = coarse.std_error / fine.std_error;
    EXPECT_GE(ratio, 5.0);
    EXPECT_LE(ratio, 20.0);
}

TEST(gurvits_estimate, converges_to_permanent) {
    Rng rng(12);
    auto m = random_complex_matrix(4, rng);
    auto est = gurvits_estimate(m, 200000, 3);
    EXPECT_LE(std::abs(est.mean - perm_ryser(m)), 5 * est.std_error);
}

TEST(gurvits_estimate, errors) {
    EXPECT_ERROR_KIND(gurvits_estimate(ComplexMatrix(2, 3), 10, 0), ErrorKind::Dimension);
    EXPECT_ERROR_KIND(gurvits_estimate(ComplexMatrix::identity(2), 0, 0), ErrorKind::Domain);
}

TEST(gurvits_exhaustive, examples) {
    EXPECT_EQ(gurvits_exhaustive(all_ones(2)), Complex(2));
    EXPECT_EQ(gurvits_exhaustive(ComplexMatrix::identity(3)), Complex(1));
    Rng rng(4);
    auto m4 = random_complex_matrix(4, rng);
    EXPECT_LE(relative_error(gurvits_exhaustive(m4), perm_ryser(m4)), 1e-10);
    auto m3 = random_complex_matrix(3, rng);
    EXPECT_LE(std::abs(gurvits_exhaustive(m3) - perm_naive(m3)), 1e-12);
}

TEST(gurvits_exhaustive, equals_naive_property) {
    Rng rng(2024);
    for (int trial = 0; trial < 120; trial++) {
        size_t n = 1 + trial % 7;
        auto m = random_complex_matrix(n, rng);
        ASSERT_LE(relative_error(gurvits_exhaustive(m), perm_naive(m)), 1e-9) << "n " << n;
    }
}

TEST(gurvits_exhaustive, size_limit) {
    EXPECT_ERROR_KIND(gurvits_exhaustive(ComplexMatrix::identity(21)), ErrorKind::SizeLimit);
}
