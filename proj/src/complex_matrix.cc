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

#include "bosonrace/complex_matrix.h"

#include <cmath>
#include <string>

#include "bosonrace/error.h"

namespace bosonrace {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::Dimension, "matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw Error(
            ErrorKind::Dimension,
            "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::Domain, "matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::Dimension, "matrix product with mismatched inner dimension");
    }
    ComplexMatrix result(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex x = a(r, k);
            for (size_t c = 0; c < b.cols(); c++) {
                result(r, c) += x * b(k, c);
            }
        }
    }
    return result;
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) {
        throw Error(
            ErrorKind::Dimension,
            std::string(what) + " requires a square matrix, got " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()));
    }
}

}  // namespace bosonrace
