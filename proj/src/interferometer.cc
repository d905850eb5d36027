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

#include "bosonrace/interferometer.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bosonrace/error.h"

namespace bosonrace {

size_t triangular_crossing_count(size_t modes) {
    return modes * (modes - (modes > 0)) / 2;
}

void validate_mesh(const MeshSpec &spec) {
    if (spec.modes < 2) {
        throw Error(ErrorKind::Domain, "mesh needs at least 2 modes");
    }
    if (spec.layout != "triangular") {
        throw Error(ErrorKind::Domain, "unknown mesh layout '" + spec.layout + "'");
    }
    size_t expected = triangular_crossing_count(spec.modes);
    if (spec.crossings.size() != expected) {
        throw Error(
            ErrorKind::Domain,
            "triangular mesh on " + std::to_string(spec.modes) + " modes needs " + std::to_string(expected) +
                " crossings, got " + std::to_string(spec.crossings.size()));
    }
    for (size_t k = 0; k < spec.crossings.size(); k++) {
        const Crossing &c = spec.crossings[k];
        std::string where = "crossing " + std::to_string(k) + ": ";
        if (c.top_row + 1 >= spec.modes) {
            throw Error(ErrorKind::Domain, where + "top_row out of range");
        }
        if (!(c.reflectivity >= 0 && c.reflectivity <= 1)) {
            throw Error(ErrorKind::Domain, where + "reflectivity must lie in [0, 1]");
        }
        if (!(c.phase >= 0 && c.phase < 2 * std::numbers::pi)) {
            throw Error(ErrorKind::Domain, where + "phase must lie in [0, 2pi)");
        }
    }
}

MeshSpec triangular_mesh(size_t modes, std::span<const double> reflectivities, std::span<const double> phases) {
    size_t count = triangular_crossing_count(modes);
    if (reflectivities.size() != count || (!phases.empty() && phases.size() != count)) {
        throw Error(
            ErrorKind::Domain,
            "triangular mesh on " + std::to_string(modes) + " modes needs " + std::to_string(count) +
                " reflectivities and phases");
    }
    MeshSpec spec{.modes = modes, .layout = "triangular", .crossings = {}};
    spec.crossings.reserve(count);
    size_t k = 0;
    for (size_t diagonal = 0; diagonal + 1 < modes; diagonal++) {
        for (size_t row = diagonal + 1; row-- > 0;) {
            spec.crossings.push_back(Crossing{
                .top_row = row,
                .reflectivity = reflectivities[k],
                .phase = phases.empty() ? 0.0 : phases[k],
            });
            k++;
        }
    }
    validate_mesh(spec);
    return spec;
}

MeshSpec random_triangular_mesh(size_t modes, uint64_t seed) {
    Rng rng(seed);
    size_t count = triangular_crossing_count(modes);
    std::vector<double> reflectivities(count);
    std::vector<double> phases(count);
    for (size_t k = 0; k < count; k++) {
        reflectivities[k] = rng.uniform();
        phases[k] = 2 * std::numbers::pi * rng.uniform();
    }
    return triangular_mesh(modes, reflectivities, phases);
}

double effective_reflectivity(const PolarizationSplit &split) {
    if (!(split.theta >= 0 && split.theta <= std::numbers::pi / 2)) {
        throw Error(ErrorKind::Domain, "polarization angle must lie in [0, pi/2]");
    }
    double c = std::cos(split.theta);
    double s = std::sin(split.theta);
    return c * c * split.r_h + s * s * split.r_v;
}

namespace {

struct Block {
    Complex a, b, c, d;
};

Block crossing_block(const Crossing &crossing) {
    double t = std::sqrt(1 - crossing.reflectivity);
    double r = std::sqrt(crossing.reflectivity);
    Complex phase = std::polar(1.0, crossing.phase);
    return Block{t, phase * r, -std::conj(phase) * r, t};
}

}  // namespace

ComplexMatrix crossing_matrix(size_t modes, const Crossing &crossing) {
    if (crossing.top_row + 1 >= modes) {
        throw Error(ErrorKind::Domain, "crossing top_row out of range");
    }
    Block blk = crossing_block(crossing);
    ComplexMatrix result = ComplexMatrix::identity(modes);
    size_t i = crossing.top_row;
    result(i, i) = blk.a;
    result(i, i + 1) = blk.b;
    result(i + 1, i) = blk.c;
    result(i + 1, i + 1) = blk.d;
    return result;
}

ComplexMatrix mesh_unitary(const MeshSpec &spec) {
    validate_mesh(spec);
    size_t m = spec.modes;
    ComplexMatrix u = ComplexMatrix::identity(m);
    // Left-multiply by each crossing: only rows top_row and top_row + 1 change.
    for (const Crossing &crossing : spec.crossings) {
        Block blk = crossing_block(crossing);
        size_t i = crossing.top_row;
        for (size_t col = 0; col < m; col++) {
            Complex upper = u(i, col);
            Complex lower = u(i + 1, col);
            u(i, col) = blk.a * upper + blk.b * lower;
            u(i + 1, col) = blk.c * upper + blk.d * lower;
        }
    }
    return u;
}

ComplexMatrix ginibre_matrix(size_t rows, size_t cols, Rng &rng) {
    std::vector<Complex> entries(rows * cols);
    for (auto &z : entries) {
        z = rng.complex_normal();
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix haar_unitary(size_t modes, uint64_t seed) {
    if (modes == 0) {
        throw Error(ErrorKind::Domain, "haar_unitary requires m >= 1");
    }
    Rng rng(seed);
    ComplexMatrix z = ginibre_matrix(modes, modes, rng);

    using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Mat g = Eigen::Map<const Mat>(z.entries().data(), modes, modes);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();

    ComplexMatrix u(modes, modes);
    for (size_t col = 0; col < modes; col++) {
        Complex diag = r(col, col);
        Complex phase = std::abs(diag) > 0 ? diag / std::abs(diag) : Complex(1);
        for (size_t row = 0; row < modes; row++) {
            u(row, col) = q(row, col) * phase;
        }
    }
    return u;
}

UnitarityReport check_unitary(const ComplexMatrix &m, double tol) {
    require_square(m, "check_unitary");
    size_t n = m.rows();
    double worst = 0;
    for (size_t j = 0; j < n; j++) {
        for (size_t k = 0; k < n; k++) {
            Complex dot = 0;
            for (size_t c = 0; c < n; c++) {
                dot += m(j, c) * std::conj(m(k, c));
            }
            if (j == k) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return UnitarityReport{.max_deviation = worst, .pass = worst <= tol};
}

ComplexMatrix scatter_submatrix(const ComplexMatrix &u, const ModeConfig &input, const ModeConfig &output) {
    require_square(u, "scatter_submatrix");
    if (input.num_modes() != u.rows() || output.num_modes() != u.rows()) {
        throw Error(
            ErrorKind::Config, "mode configuration length does not match the " + std::to_string(u.rows()) +
                                   "-mode unitary");
    }
    if (input.num_photons() != output.num_photons()) {
        throw Error(
            ErrorKind::Config, "photon number mismatch: input has " + std::to_string(input.num_photons()) +
                                   ", output has " + std::to_string(output.num_photons()));
    }
    if (input.num_photons() == 0) {
        throw Error(ErrorKind::Config, "configurations must contain at least one photon");
    }
    std::vector<size_t> rows = output.modes();
    std::vector<size_t> cols = input.modes();
    size_t n = rows.size();
    ComplexMatrix sub(n, n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            sub(a, b) = u(rows[a], cols[b]);
        }
    }
    return sub;
}

}  // namespace bosonrace
