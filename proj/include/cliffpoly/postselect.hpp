// Copyright 2026 The cliffpoly developers
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

#pragma once

#include "cliffpoly/facets.hpp"
#include "cliffpoly/so3.hpp"

namespace cliffpoly {

/// Acceptance probabilities below this are treated as a branch that cannot
/// herald.
inline constexpr double kEpsProb = 1e-12;

/// A weight-two Pauli measurement on the (Bell-half, gate-half) pair;
/// identity factors are excluded by construction.
struct TwoQubitPauli {
    Pauli first = Pauli::Y;
    Pauli second = Pauli::X;
};

struct BlochVector {
    double x = 0, y = 0, z = 0;

    double l1() const { return std::abs(x) + std::abs(y) + std::abs(z); }
    double l2() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Inside iff |x| + |y| + |z| <= 1 + 1e-12 (boundary counts as inside).
/// The octahedron is exactly the stabilizer-reachable single-qubit states.
bool octahedron_inside(const BlochVector &r);

struct PostselectionResult {
    BlochVector bloch;
    double accept_probability = 0;
};

/// Full density-matrix route: applies u to half a Bell pair, projects with
/// Pi = (I + outcome * sigma_a otimes sigma_b) / 2, and normalizes. The
/// surviving state carries one logical qubit on the stabilized subspace; its
/// Bloch vector is read through the logical frame
///   X_L = I (x) sigma_b,
///   Y_L = sigma_prev(a) (x) sigma_prev(b)   (prev: X->Z, Y->X, Z->Y),
///   Z_L = -i X_L Y_L,
/// which reproduces the closed-form YX reduction exactly. Throws
/// ZeroProbabilityBranchError when the branch probability is <= kEpsProb,
/// std::invalid_argument for an outcome other than +-1.
PostselectionResult postselect_oracle(const Unitary2 &u, const TwoQubitPauli &meas, int outcome);

/// Closed-form reduction for a YX measurement postselected on +1, reading
/// coefficients off the matrix layout: with den = c_II + c_YX,
///   r = (0, (c_XZ - c_ZY)/den, -(c_XY + c_ZZ)/den).
/// Accepts noisy inputs (1-p)R; c_II stays 1 while the gate coefficients
/// scale. Throws ZeroProbabilityBranchError when |den| < 1e-12.
BlochVector postselect_formula_yx(const Mat3 &m);

/// Same closed-form reduction for any weight-two measurement and outcome.
BlochVector postselect_formula(const Mat3 &m, const TwoQubitPauli &meas, int outcome);

/// How far the postselected two-qubit state is from (logical qubit) x
/// (stabilizer qubit): the largest deviation among t(L*S) = t(L), t(S) = 1,
/// and t(P) = 0 for every Pauli P anticommuting with the stabilizer.
double postselect_product_residual(const Unitary2 &u, const TwoQubitPauli &meas, int outcome);

/// Every B facet is the inequality "the corrected postselected state lies
/// past the y + z = 1 octahedron edge" for exactly one (measurement, outcome,
/// Pauli correction) triple; the table is built once by symbolic expansion of
/// the 9 x 2 x 4 induced inequalities and matched against the facet set.
struct FacetMeasurement {
    TwoQubitPauli meas;
    int outcome = +1;
    Pauli correction = Pauli::I;  // applied to the Bloch vector as an SO(3) rotation
};

/// Lookup for a B-kind facet. Throws std::invalid_argument for other kinds.
FacetMeasurement b_facet_measurement(const Facet &facet);

/// Both sides of the equivalence, evaluated: facet_value = m . F against the
/// corrected edge value y' + z'. The sides satisfy the exact identity
/// facet_value - 1 = (c_II + o c_ab) * (edge_value - 1), so their positions
/// relative to 1 always agree (away from a zero-probability branch).
/// l1_corrected = |y'| + |z'| tracks octahedron membership, which matches the
/// facet side exactly when the maximum over the facet's 4-member measurement
/// family is taken.
struct EquivalenceRecord {
    FacetMeasurement measurement;
    double facet_value = 0;
    BlochVector bloch_corrected;
    double edge_value = 0;
    double l1_corrected = 0;
    bool facet_violated = false;  // facet_value > 1
    bool edge_violated = false;   // edge_value > 1
};

EquivalenceRecord facet_violation_equivalence(const Mat3 &m, const Facet &facet);

}  // namespace cliffpoly
