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

#ifndef BOSONRACE_COMPLEX_MATRIX_H
#define BOSONRACE_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bosonrace {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Both dimensions are positive and every
/// entry is finite at construction; mutation through operator() is the
/// caller's responsibility.
class ComplexMatrix {
   public:
    /// Zero matrix.
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(size_t n);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> row(size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<Complex> &entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Throws ErrorKind::Dimension unless `m` is square.
void require_square(const ComplexMatrix &m, const char *what);

}  // namespace bosonrace

#endif
