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

#include "cliffpoly/postselect.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "cliffpoly/errors.hpp"

namespace cliffpoly {

namespace {

// ---- Pauli algebra with phase tracking -------------------------------------

// sigma_a sigma_b = phase * sigma_c; phases are powers of i, tracked as an
// exponent mod 4.
struct PauliProd {
    int phase_i = 0;  // exponent of i
    int axis = 0;
};

PauliProd pauli_mul_1q(int a, int b) {
    if (a == 0) return {0, b};
    if (b == 0) return {0, a};
    if (a == b) return {0, 0};
    // XY=iZ, YZ=iX, ZX=iY and the reversed products pick up -i.
    int c = 6 - a - b;
    bool cyclic = (b - a + 3) % 3 == 1;
    return {cyclic ? 1 : 3, c};
}

// A two-qubit Pauli with a real sign: sign * sigma_p (x) sigma_q.
struct SignedPauli2 {
    int sign = 1;  // +-1; Hermitian products in this module are always real
    int p = 0;
    int q = 0;
};

SignedPauli2 multiply(const SignedPauli2 &a, const SignedPauli2 &b) {
    PauliProd f = pauli_mul_1q(a.p, b.p);
    PauliProd s = pauli_mul_1q(a.q, b.q);
    int phase = (f.phase_i + s.phase_i) % 4;
    if (phase % 2 != 0) {
        throw InternalConsistencyError("postselect: unexpected imaginary Pauli product");
    }
    return {a.sign * b.sign * (phase == 0 ? 1 : -1), f.axis, s.axis};
}

SignedPauli2 times_minus_i(const SignedPauli2 &a, const SignedPauli2 &b) {
    PauliProd f = pauli_mul_1q(a.p, b.p);
    PauliProd s = pauli_mul_1q(a.q, b.q);
    int phase = (f.phase_i + s.phase_i + 3) % 4;  // extra -i
    if (phase % 2 != 0) {
        throw InternalConsistencyError("postselect: -i * product is not Hermitian");
    }
    return {a.sign * b.sign * (phase == 0 ? 1 : -1), f.axis, s.axis};
}

int prev_axis(int a) {
    // X -> Z, Y -> X, Z -> Y
    return a == 1 ? 3 : a - 1;
}

// Logical frame on the subspace stabilized by outcome * sigma_a (x) sigma_b.
// Pinned so the YX / +1 case reproduces the closed-form reduction verbatim.
struct LogicalFrame {
    SignedPauli2 x, y, z;
};

LogicalFrame logical_frame(int a, int b) {
    LogicalFrame fr;
    fr.x = {1, 0, b};
    fr.y = {1, prev_axis(a), prev_axis(b)};
    fr.z = times_minus_i(fr.x, fr.y);
    return fr;
}

void validate_meas(const TwoQubitPauli &meas) {
    if (meas.first == Pauli::I || meas.second == Pauli::I) {
        throw std::invalid_argument("postselect: measurement must have weight two");
    }
}

void validate_outcome(int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("postselect: outcome must be +1 or -1");
    }
}

// c-table view of a SignedPauli2: its expectation under a coefficient table.
double expectation(const PauliCoefficients &c, const SignedPauli2 &sp) {
    return sp.sign * c(static_cast<Pauli>(sp.p), static_cast<Pauli>(sp.q));
}

// [c(L) + c(L*S)] for a logical operator against stabilizer S.
double logical_numerator(const PauliCoefficients &c, const SignedPauli2 &l, const SignedPauli2 &s) {
    return expectation(c, l) + expectation(c, multiply(l, s));
}

// ---- dense 4x4 complex helpers for the oracle ------------------------------

using C4 = std::array<std::array<cplx, 4>, 4>;

const cplx kSigma[4][2][2] = {
    {{1, 0}, {0, 1}},
    {{0, 1}, {1, 0}},
    {{0, cplx(0, -1)}, {cplx(0, 1), 0}},
    {{1, 0}, {0, -1}},
};

C4 kron(int p, int q) {
    C4 out{};
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++)
            for (int c = 0; c < 2; c++)
                for (int d = 0; d < 2; d++)
                    out[2 * a + b][2 * c + d] = kSigma[p][a][c] * kSigma[q][b][d];
    return out;
}

C4 matmul(const C4 &a, const C4 &b) {
    C4 out{};
    for (int i = 0; i < 4; i++)
        for (int k = 0; k < 4; k++) {
            cplx v = a[i][k];
            if (v == cplx{}) continue;
            for (int j = 0; j < 4; j++) out[i][j] += v * b[k][j];
        }
    return out;
}

cplx trace_prod(const C4 &a, const C4 &b) {
    cplx t = 0;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) t += a[i][j] * b[j][i];
    return t;
}

C4 bell_state(const Unitary2 &u) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::array<cplx, 4> psi = {u(0, 0) * inv_sqrt2, u(1, 0) * inv_sqrt2,
                               u(0, 1) * inv_sqrt2, u(1, 1) * inv_sqrt2};
    C4 rho{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) rho[i][j] = psi[i] * std::conj(psi[j]);
    return rho;
}

// Postselected (normalized) state and its acceptance probability.
std::pair<C4, double> project(const Unitary2 &u, const TwoQubitPauli &meas, int outcome) {
    C4 rho = bell_state(u);
    C4 pauli = kron(static_cast<int>(meas.first), static_cast<int>(meas.second));
    C4 proj{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            proj[i][j] = 0.5 * (static_cast<double>(outcome) * pauli[i][j]);
        }
        proj[i][i] += 0.5;
    }
    C4 prp = matmul(proj, matmul(rho, proj));
    cplx q = 0;
    for (int i = 0; i < 4; i++) q += prp[i][i];
    if (std::abs(q.imag()) > 1e-12) {
        throw InternalConsistencyError("postselect_oracle: acceptance probability not real");
    }
    double prob = q.real();
    if (prob <= kEpsProb) {
        throw ZeroProbabilityBranchError("postselect_oracle: branch probability below 1e-12");
    }
    for (auto &row : prp)
        for (cplx &v : row) v /= prob;
    return {prp, prob};
}

double pauli_expectation(const C4 &state, const SignedPauli2 &sp) {
    cplx t = trace_prod(state, kron(sp.p, sp.q));
    if (std::abs(t.imag()) > 1e-10) {
        throw InternalConsistencyError("postselect_oracle: Pauli expectation not real");
    }
    return sp.sign * t.real();
}

// ---- facet <-> measurement table -------------------------------------------

struct EquivalenceTable {
    // Indexed by facet id; only B-kind ids are populated.
    std::array<FacetMeasurement, 120> by_facet{};
    std::array<bool, 120> present{};
};

// Sign action of the four corrections on the (y, z) components of a vector in
// the logical YZ plane: I, X, Y, Z as SO(3) rotations.
void correction_signs(Pauli corr, int &sy, int &sz) {
    switch (corr) {
        case Pauli::I: sy = 1; sz = 1; break;
        case Pauli::X: sy = -1; sz = -1; break;
        case Pauli::Y: sy = 1; sz = -1; break;
        default: sy = -1; sz = 1; break;
    }
}

// Expands "corrected postselected state lies past the y + z = 1 edge" into an
// integer linear inequality m . G > 1 and returns G. All coefficients land on
// gate (weight-two) Pauli terms; the c_II terms collapse to the constant 1.
Mat3i induced_facet(int a, int b, int outcome, Pauli corr) {
    // Functional over the 16-entry coefficient table.
    std::array<std::array<int, 4>, 4> coef{};
    LogicalFrame fr = logical_frame(a, b);
    SignedPauli2 stab{outcome, a, b};
    auto add = [&](const SignedPauli2 &l, int w) {
        coef[l.p][l.q] += w * l.sign;
        SignedPauli2 ls = multiply(l, stab);
        coef[ls.p][ls.q] += w * ls.sign;
    };
    int sy = 0, sz = 0;
    correction_signs(corr, sy, sz);
    add(fr.y, sy);
    add(fr.z, sz);
    coef[a][b] -= outcome;  // denominator's gate part moves across the inequality

    if (coef[0][0] != 0) {
        throw InternalConsistencyError("induced_facet: constant term did not cancel");
    }
    Mat3i g;
    static const int col_sign[4] = {0, 1, -1, 1};
    for (int p = 1; p < 4; p++) {
        if (coef[0][p] != 0 || coef[p][0] != 0) {
            throw InternalConsistencyError("induced_facet: local coefficient survived");
        }
        for (int q = 1; q < 4; q++) {
            g(q - 1, p - 1) = coef[p][q] * col_sign[p];
        }
    }
    return g;
}

const EquivalenceTable &equivalence_table() {
    static const EquivalenceTable table = [] {
        EquivalenceTable t;
        const FacetSet &set = FacetSet::instance();
        int hits = 0;
        for (int a = 1; a <= 3; a++) {
            for (int b = 1; b <= 3; b++) {
                for (int outcome : {+1, -1}) {
                    for (Pauli corr : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
                        Mat3i g = induced_facet(a, b, outcome, corr);
                        int id = set.id_of(g);
                        if (id < 0 || set.facet(id).kind != FacetKind::B || t.present[id]) {
                            throw InternalConsistencyError(
                                "equivalence_table: induced inequality is not a fresh B facet");
                        }
                        t.by_facet[id] = {{static_cast<Pauli>(a), static_cast<Pauli>(b)}, outcome, corr};
                        t.present[id] = true;
                        hits++;
                    }
                }
            }
        }
        if (hits != 72) {
            throw InternalConsistencyError("equivalence_table: expected 72 facets");
        }
        return t;
    }();
    return table;
}

}  // namespace

bool octahedron_inside(const BlochVector &r) {
    return r.l1() <= 1.0 + 1e-12;
}

PostselectionResult postselect_oracle(const Unitary2 &u, const TwoQubitPauli &meas, int outcome) {
    validate_meas(meas);
    validate_outcome(outcome);
    auto [state, prob] = project(u, meas, outcome);
    LogicalFrame fr = logical_frame(static_cast<int>(meas.first), static_cast<int>(meas.second));
    BlochVector r{pauli_expectation(state, fr.x), pauli_expectation(state, fr.y),
                  pauli_expectation(state, fr.z)};
    return {r, prob};
}

BlochVector postselect_formula(const Mat3 &m, const TwoQubitPauli &meas, int outcome) {
    validate_meas(meas);
    validate_outcome(outcome);
    int a = static_cast<int>(meas.first), b = static_cast<int>(meas.second);
    PauliCoefficients c = coefficients_from_matrix(m);
    SignedPauli2 stab{outcome, a, b};
    double den = 1.0 + expectation(c, stab);
    if (std::abs(den) < 1e-12) {
        throw ZeroProbabilityBranchError("postselect_formula: branch probability below 1e-12");
    }
    LogicalFrame fr = logical_frame(a, b);
    return {logical_numerator(c, fr.x, stab) / den, logical_numerator(c, fr.y, stab) / den,
            logical_numerator(c, fr.z, stab) / den};
}

BlochVector postselect_formula_yx(const Mat3 &m) {
    return postselect_formula(m, {Pauli::Y, Pauli::X}, +1);
}

double postselect_product_residual(const Unitary2 &u, const TwoQubitPauli &meas, int outcome) {
    validate_meas(meas);
    validate_outcome(outcome);
    auto [state, prob] = project(u, meas, outcome);
    (void)prob;
    int a = static_cast<int>(meas.first), b = static_cast<int>(meas.second);
    SignedPauli2 stab{outcome, a, b};
    double residual = std::abs(pauli_expectation(state, stab) - 1.0);
    LogicalFrame fr = logical_frame(a, b);
    for (const SignedPauli2 &l : {fr.x, fr.y, fr.z}) {
        double direct = pauli_expectation(state, l);
        double via_stab = pauli_expectation(state, multiply(l, stab));
        residual = std::max(residual, std::abs(direct - via_stab));
    }
    // Everything anticommuting with the stabilizer must average to zero.
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            if (p == 0 && q == 0) continue;
            bool anti_first = p != 0 && p != a;
            bool anti_second = q != 0 && q != b;
            if (anti_first == anti_second) continue;  // commutes with stabilizer
            residual = std::max(residual, std::abs(pauli_expectation(state, {1, p, q})));
        }
    }
    return residual;
}

FacetMeasurement b_facet_measurement(const Facet &facet) {
    if (facet.kind != FacetKind::B) {
        throw std::invalid_argument("b_facet_measurement: facet is not B-kind");
    }
    const EquivalenceTable &t = equivalence_table();
    if (!t.present[facet.id]) {
        throw InternalConsistencyError("b_facet_measurement: facet missing from table");
    }
    return t.by_facet[facet.id];
}

EquivalenceRecord facet_violation_equivalence(const Mat3 &m, const Facet &facet) {
    EquivalenceRecord rec;
    rec.measurement = b_facet_measurement(facet);
    rec.facet_value = frobenius(m, facet.matrix);
    BlochVector r = postselect_formula(m, rec.measurement.meas, rec.measurement.outcome);
    int sy = 0, sz = 0;
    correction_signs(rec.measurement.correction, sy, sz);
    rec.bloch_corrected = {r.x, sy * r.y, sz * r.z};
    rec.edge_value = rec.bloch_corrected.y + rec.bloch_corrected.z;
    rec.l1_corrected = rec.bloch_corrected.l1();
    rec.facet_violated = rec.facet_value > 1.0;
    rec.edge_violated = rec.edge_value > 1.0;
    return rec;
}

}  // namespace cliffpoly
