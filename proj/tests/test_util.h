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

#ifndef BOSONRACE_TESTS_TEST_UTIL_H
#define BOSONRACE_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <complex>

#include "gtest/gtest.h"

#include "bosonrace/complex_matrix.h"
#include "bosonrace/error.h"
#include "bosonrace/interferometer.h"
#include "bosonrace/rng.h"

namespace bosonrace::testing {

inline ComplexMatrix random_complex_matrix(size_t n, Rng &rng) {
    return ginibre_matrix(n, n, rng);
}

inline double relative_error(Complex actual, Complex expected) {
    return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

/// 50:50 splitter with zero phase.
inline ComplexMatrix balanced_splitter() {
    return crossing_matrix(2, Crossing{.top_row = 0, .reflectivity = 0.5, .phase = 0});
}

}  // namespace bosonrace::testing

#define EXPECT_ERROR_KIND(statement, expected_kind)                                  \
    do {                                                                             \
        try {                                                                        \
            statement;                                                               \
            ADD_FAILURE() << "expected bosonrace::Error from: " #statement;          \
        } catch (const ::bosonrace::Error &e) {                                      \
            EXPECT_EQ(e.kind(), expected_kind) << e.what();                          \
        }                                                                            \
    } while (0)

#endif
