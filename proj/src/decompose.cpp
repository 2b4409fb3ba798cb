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

#include "cliffpoly/decompose.hpp"

#include <cmath>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/errors.hpp"
#include "cliffpoly/facets.hpp"

namespace cliffpoly {

namespace {

constexpr int kVars = 24;         // one weight per Clifford vertex
constexpr int kRows = 10;         // 9 matrix entries + normalization
constexpr int kTotal = kVars + kRows;  // weights + phase-one artificials
constexpr int kPivotCap = 10000;
constexpr double kPivotEps = 1e-11;

// Phase-one dense simplex with Bland's rule. The polytope is highly
// symmetric, so degenerate pivots are routine; Bland's smallest-index rule
// keeps the walk from cycling.
struct PhaseOneSimplex {
    // tableau[r][c]: rows are constraints, columns are the 34 variables plus
    // the rhs in column kTotal.
    double t[kRows][kTotal + 1] = {};
    double reduced[kTotal] = {};
    double objective = 0;
    int basis[kRows] = {};

    explicit PhaseOneSimplex(const Mat3 &target) {
        const auto &cliffords = CliffordGroup::instance().elements();
        for (int j = 0; j < kVars; j++) {
            for (int k = 0; k < 9; k++) t[k][j] = static_cast<double>(cliffords[j].matrix.e[k]);
            t[9][j] = 1.0;
        }
        for (int k = 0; k < 9; k++) t[k][kTotal] = target.e[k];
        t[9][kTotal] = 1.0;
        // Flip rows until rhs >= 0, then install the artificial basis.
        for (int r = 0; r < kRows; r++) {
            if (t[r][kTotal] < 0) {
                for (int c = 0; c <= kTotal; c++) t[r][c] = -t[r][c];
            }
            t[r][kVars + r] = 1.0;
            basis[r] = kVars + r;
        }
        // Reduced costs for minimizing the artificial sum.
        for (int j = 0; j < kTotal; j++) {
            double s = 0;
            for (int r = 0; r < kRows; r++) s += t[r][j];
            reduced[j] = (j >= kVars ? 1.0 : 0.0) - s;
        }
        for (int r = 0; r < kRows; r++) objective += t[r][kTotal];
    }

    void pivot(int row, int col) {
        double inv = 1.0 / t[row][col];
        for (int c = 0; c <= kTotal; c++) t[row][c] *= inv;
        t[row][col] = 1.0;
        for (int r = 0; r < kRows; r++) {
            if (r == row || t[r][col] == 0.0) continue;
            double f = t[r][col];
            for (int c = 0; c <= kTotal; c++) t[r][c] -= f * t[row][c];
            t[r][col] = 0.0;
        }
        double f = reduced[col];
        if (f != 0.0) {
            for (int c = 0; c < kTotal; c++) reduced[c] -= f * t[row][c];
            objective += f * t[row][kTotal];
            reduced[col] = 0.0;
        }
        basis[row] = col;
    }

    // Returns true when the optimum was reached within the pivot cap.
    bool solve() {
        for (int iter = 0; iter < kPivotCap; iter++) {
            int enter = -1;
            for (int j = 0; j < kTotal; j++) {
                if (reduced[j] < -kPivotEps) {
                    enter = j;
                    break;  // Bland: smallest improving index
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best_ratio = 0;
            for (int r = 0; r < kRows; r++) {
                if (t[r][enter] <= kPivotEps) continue;
                double ratio = t[r][kTotal] / t[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return true;  // cannot happen: objective bounded by 0
            pivot(leave, enter);
        }
        return false;
    }
};

}  // namespace

std::optional<ConvexWeights> decompose(const Mat3 &m) {
    PhaseOneSimplex lp(m);
    if (!lp.solve()) {
        throw SolverFailureError("decompose: pivot cap exceeded");
    }
    if (lp.objective > kEpsFeasible) {
        return std::nullopt;
    }
    ConvexWeights out;
    for (int r = 0; r < kRows; r++) {
        if (lp.basis[r] < kVars) out.weights[lp.basis[r]] = lp.t[r][kTotal];
    }
    for (double &w : out.weights) {
        if (w < 0) {
            if (w < -1e-9) throw InternalConsistencyError("decompose: weight below -1e-9");
            w = 0;
        }
    }
    const auto &cliffords = CliffordGroup::instance().elements();
    Mat3 recon = Mat3::zero();
    for (int j = 0; j < kVars; j++) {
        if (out.weights[j] == 0) continue;
        recon = recon + out.weights[j] * cliffords[j].matrix.as_mat3();
    }
    out.reconstruction_error = max_abs_diff(recon, m);
    return out;
}

CrossCheckReport membership_cross_check(const Mat3 &m) {
    MembershipVerdict verdict = polytope_membership(m);
    bool feasible = decompose(m).has_value();
    CrossCheckReport rep;
    rep.membership_inside = verdict.inside;
    rep.lp_feasible = feasible;
    rep.max_facet_value = verdict.max_value;
    if (verdict.inside == feasible) {
        rep.verdict = verdict.inside ? CrossCheckReport::Verdict::AgreeInside
                                     : CrossCheckReport::Verdict::AgreeOutside;
    } else if (std::abs(verdict.max_value - 1.0) < kBoundaryBand) {
        rep.verdict = CrossCheckReport::Verdict::BoundaryAmbiguous;
    } else {
        rep.verdict = CrossCheckReport::Verdict::Disagree;
    }
    return rep;
}

}  // namespace cliffpoly
