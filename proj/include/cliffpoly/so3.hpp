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

#include <array>
#include <complex>

#include "cliffpoly/linalg.hpp"

namespace cliffpoly {

inline constexpr double kEpsUnitary = 1e-10;
inline constexpr double kEpsOrth = 1e-9;

using cplx = std::complex<double>;

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/// Euler-style gate parameterization: rows of the unitary are
/// (e^{i gamma} cos theta, -e^{i delta} sin theta) and
/// (e^{-i delta} sin theta, e^{-i gamma} cos theta). Radians, not normalized.
struct GateAngles {
    double theta = 0;
    double gamma = 0;
    double delta = 0;
};

/// Special-unitary 2x2 matrix. Construction validates U^dag U = I to within
/// kEpsUnitary and rescales away the global phase so det(U) = 1; the SO(3)
/// image is phase-invariant so nothing downstream depends on the branch cut.
class Unitary2 {
  public:
    /// Entries row-major. Throws std::invalid_argument when not unitary.
    explicit Unitary2(const std::array<cplx, 4> &entries);

    cplx operator()(int r, int c) const { return e_[2 * r + c]; }
    const std::array<cplx, 4> &entries() const { return e_; }

    friend Unitary2 operator*(const Unitary2 &a, const Unitary2 &b);

  private:
    Unitary2() = default;
    std::array<cplx, 4> e_{};
};

/// Special-orthogonal 3x3 matrix: R^T R = I and det R = 1 within kEpsOrth.
class Rotation3 {
  public:
    /// Throws std::invalid_argument when m is not special-orthogonal.
    explicit Rotation3(const Mat3 &m);

    /// Wraps without validating; callers must have checked the invariants.
    static Rotation3 unchecked(const Mat3 &m) {
        Rotation3 r;
        r.m_ = m;
        return r;
    }

    const Mat3 &mat() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

  private:
    Rotation3() = default;
    Mat3 m_;
};

/// True when R^T R = I and det R = 1, both within eps.
bool is_special_orthogonal(const Mat3 &m, double eps);

/// The 16 real coefficients c_ij = Tr(rho (sigma_i otimes sigma_j)) of a
/// two-qubit state in the Pauli basis.
struct PauliCoefficients {
    std::array<double, 16> c{};

    double &operator()(Pauli i, Pauli j) { return c[4 * static_cast<int>(i) + static_cast<int>(j)]; }
    double operator()(Pauli i, Pauli j) const { return c[4 * static_cast<int>(i) + static_cast<int>(j)]; }
};

/// Builds the displayed 2x2 matrix for the angle triple. Throws
/// std::invalid_argument for non-finite angles.
Unitary2 unitary_from_angles(const GateAngles &angles);

/// Applies U to the second half of a Bell pair and returns all 16 Pauli
/// coefficients of the resulting two-qubit state. The six local coefficients
/// (c_I*, c_*I for * != I) vanish and c_II = 1, both to 1e-12.
PauliCoefficients pauli_coefficients(const Unitary2 &u);

/// The SO(3) (Bloch-ball) representation of u, assembled from the Pauli
/// coefficients: column 1 = (c_XX, c_XY, c_XZ), column 2 = -(c_YX, c_YY,
/// c_YZ), column 3 = (c_ZX, c_ZY, c_ZZ). Throws InternalConsistencyError if
/// the assembled matrix fails the SO(3) invariants.
Rotation3 rotation_from_unitary(const Unitary2 &u);

/// Shorthand for rotation_from_unitary(unitary_from_angles(angles)).
Rotation3 rotation_from_angles(const GateAngles &angles);

/// The unital part of a depolarized gate: (1-p) * R. Throws
/// std::invalid_argument unless 0 <= p <= 1.
Mat3 depolarize(const Rotation3 &r, double p);

/// Reads a coefficient table off a 3x3 matrix via the inverse of the
/// rotation layout: c_II = 1, the six local coefficients 0, and
/// c_ij = (+,-,+)_i * m(j, i). For M = (1-p)R this scales the nine gate
/// coefficients by (1-p) and keeps c_II = 1, matching a depolarized gate
/// acting on half a Bell pair.
PauliCoefficients coefficients_from_matrix(const Mat3 &m);

}  // namespace cliffpoly
