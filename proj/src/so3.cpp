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

#include "cliffpoly/so3.hpp"

#include <cmath>
#include <stdexcept>

#include "cliffpoly/errors.hpp"

namespace cliffpoly {

namespace {

bool is_unitary(const std::array<cplx, 4> &e, double eps) {
    // U^dag U entries.
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            cplx s = std::conj(e[i]) * e[j] + std::conj(e[2 + i]) * e[2 + j];
            cplx want = (i == j) ? cplx(1, 0) : cplx(0, 0);
            if (std::abs(s - want) > eps) return false;
        }
    }
    return true;
}

}  // namespace

Unitary2::Unitary2(const std::array<cplx, 4> &entries) : e_(entries) {
    for (const cplx &v : e_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("Unitary2: non-finite entry");
        }
    }
    if (!is_unitary(e_, kEpsUnitary)) {
        throw std::invalid_argument("Unitary2: matrix is not unitary within 1e-10");
    }
    // Strip the global phase: det of a unitary lies on the unit circle, and
    // dividing by a square root of it forces det = 1.
    cplx det = e_[0] * e_[3] - e_[1] * e_[2];
    cplx root = std::sqrt(det);
    for (cplx &v : e_) v /= root;
}

Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) {
    std::array<cplx, 4> p;
    for (int r = 0; r < 2; r++)
        for (int c = 0; c < 2; c++)
            p[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return Unitary2(p);
}

bool is_special_orthogonal(const Mat3 &m, double eps) {
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            double s = 0;
            for (int k = 0; k < 3; k++) s += m(k, i) * m(k, j);
            if (std::abs(s - (i == j ? 1.0 : 0.0)) > eps) return false;
        }
    }
    return std::abs(m.det() - 1.0) <= eps;
}

Rotation3::Rotation3(const Mat3 &m) : m_(m) {
    for (double v : m.e) {
        if (!std::isfinite(v)) throw std::invalid_argument("Rotation3: non-finite entry");
    }
    if (!is_special_orthogonal(m, kEpsOrth)) {
        throw std::invalid_argument("Rotation3: matrix is not special-orthogonal within 1e-9");
    }
}

Unitary2 unitary_from_angles(const GateAngles &angles) {
    if (!std::isfinite(angles.theta) || !std::isfinite(angles.gamma) || !std::isfinite(angles.delta)) {
        throw std::invalid_argument("unitary_from_angles: non-finite angle");
    }
    double ct = std::cos(angles.theta), st = std::sin(angles.theta);
    cplx eg = std::polar(1.0, angles.gamma);
    cplx ed = std::polar(1.0, angles.delta);
    return Unitary2({eg * ct, -ed * st, std::conj(ed) * st, std::conj(eg) * ct});
}

PauliCoefficients pauli_coefficients(const Unitary2 &u) {
    // psi = (I (x) U)|Phi> in the |q1 q2> basis.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::array<cplx, 4> psi = {u(0, 0) * inv_sqrt2, u(1, 0) * inv_sqrt2,
                               u(0, 1) * inv_sqrt2, u(1, 1) * inv_sqrt2};
    cplx rho[4][4];
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            rho[i][j] = psi[i] * std::conj(psi[j]);

    // Single-qubit Paulis, rows then columns.
    static const cplx sigma[4][2][2] = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {1, 0}},
        {{0, cplx(0, -1)}, {cplx(0, 1), 0}},
        {{1, 0}, {0, -1}},
    };

    PauliCoefficients out;
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            cplx tr = 0;
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++)
                    for (int c = 0; c < 2; c++)
                        for (int d = 0; d < 2; d++)
                            tr += rho[2 * a + b][2 * c + d] * sigma[p][c][a] * sigma[q][d][b];
            if (std::abs(tr.imag()) >= 1e-12) {
                throw InternalConsistencyError("pauli_coefficients: trace has imaginary residue");
            }
            out.c[4 * p + q] = tr.real();
        }
    }
    return out;
}

Rotation3 rotation_from_unitary(const Unitary2 &u) {
    PauliCoefficients c = pauli_coefficients(u);
    Mat3 m;
    // Column 1 = (c_XX, c_XY, c_XZ); column 2 = -(c_YX, c_YY, c_YZ);
    // column 3 = (c_ZX, c_ZY, c_ZZ).
    static const double col_sign[3] = {1, -1, 1};
    for (int col = 0; col < 3; col++) {
        Pauli p = static_cast<Pauli>(col + 1);
        for (int row = 0; row < 3; row++) {
            Pauli q = static_cast<Pauli>(row + 1);
            m(row, col) = col_sign[col] * c(p, q);
        }
    }
    if (!is_special_orthogonal(m, kEpsOrth)) {
        throw InternalConsistencyError("rotation_from_unitary: assembled matrix is not SO(3)");
    }
    return Rotation3::unchecked(m);
}

Rotation3 rotation_from_angles(const GateAngles &angles) {
    return rotation_from_unitary(unitary_from_angles(angles));
}

Mat3 depolarize(const Rotation3 &r, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarize: noise rate must lie in [0, 1]");
    }
    return (1.0 - p) * r.mat();
}

PauliCoefficients coefficients_from_matrix(const Mat3 &m) {
    PauliCoefficients c;
    c(Pauli::I, Pauli::I) = 1.0;
    static const double col_sign[3] = {1, -1, 1};
    for (int col = 0; col < 3; col++) {
        Pauli p = static_cast<Pauli>(col + 1);
        for (int row = 0; row < 3; row++) {
            Pauli q = static_cast<Pauli>(row + 1);
            c(p, q) = col_sign[col] * m(row, col);
        }
    }
    return c;
}

}  // namespace cliffpoly
