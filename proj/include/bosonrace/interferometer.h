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

#ifndef BOSONRACE_INTERFEROMETER_H
#define BOSONRACE_INTERFEROMETER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bosonrace/complex_matrix.h"
#include "bosonrace/mode_config.h"
#include "bosonrace/rng.h"

namespace bosonrace {

/// Two-mode beam splitter acting on rows (top_row, top_row + 1):
///   [[ sqrt(1-r),           e^{i phi} sqrt(r) ],
///    [ -e^{-i phi} sqrt(r), sqrt(1-r)         ]]
struct Crossing {
    size_t top_row = 0;
    double reflectivity = 0;
    double phase = 0;

    bool operator==(const Crossing &) const = default;
};

/// Beam-splitter mesh. Crossings are applied to the field in list order.
/// The only layout is "triangular", which has m(m-1)/2 crossings.
struct MeshSpec {
    size_t modes = 0;
    std::string layout = "triangular";
    std::vector<Crossing> crossings;

    bool operator==(const MeshSpec &) const = default;
};

/// Polarization-dependent splitting of one coated interface. Defaults are the
/// H (0.9:0.1) and V (0.42:0.58) transmission:reflection ratios.
struct PolarizationSplit {
    double r_h = 0.1;
    double r_v = 0.58;
    /// Polarization angle from H, in [0, pi/2].
    double theta = 0;
};

size_t triangular_crossing_count(size_t modes);

/// Throws ErrorKind::Domain on any violated MeshSpec invariant.
void validate_mesh(const MeshSpec &spec);

/// Reck-style triangle: diagonal d = 0..m-2 places crossings on rows
/// d, d-1, ..., 0. Reflectivities and phases are consumed in that order.
MeshSpec triangular_mesh(size_t modes, std::span<const double> reflectivities, std::span<const double> phases = {});

/// Triangular mesh with uniform random reflectivities and phases.
MeshSpec random_triangular_mesh(size_t modes, uint64_t seed);

/// cos^2(theta) r_H + sin^2(theta) r_V.
double effective_reflectivity(const PolarizationSplit &split);

/// m x m matrix of a single crossing embedded in the identity.
ComplexMatrix crossing_matrix(size_t modes, const Crossing &crossing);

ComplexMatrix mesh_unitary(const MeshSpec &spec);

/// Gaussian matrix with i.i.d. standard complex normal entries.
ComplexMatrix ginibre_matrix(size_t rows, size_t cols, Rng &rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
ComplexMatrix haar_unitary(size_t modes, uint64_t seed);

struct UnitarityReport {
    double max_deviation = 0;
    bool pass = false;
};

/// max_{jk} |(M M^dagger - I)_{jk}| compared against tol.
UnitarityReport check_unitary(const ComplexMatrix &m, double tol);

/// n x n matrix whose columns are the columns of u repeated by input
/// occupation and whose rows are rows of u repeated by output occupation.
ComplexMatrix scatter_submatrix(const ComplexMatrix &u, const ModeConfig &input, const ModeConfig &output);

}  // namespace bosonrace

#endif
