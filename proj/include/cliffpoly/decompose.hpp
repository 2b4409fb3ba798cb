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
#include <optional>

#include "cliffpoly/linalg.hpp"

namespace cliffpoly {

/// Residual tolerance for the feasibility solve.
inline constexpr double kEpsFeasible = 1e-8;
/// |max_F m.F - 1| band inside which the two membership routes may
/// legitimately disagree.
inline constexpr double kBoundaryBand = 1e-7;

/// A convex combination of the 24 Clifford vertices reproducing a target
/// matrix: weights are nonnegative (tiny negatives clamped), sum to 1 within
/// 1e-9, and the weighted vertex sum matches the target within 1e-8.
struct ConvexWeights {
    std::array<double, 24> weights{};
    double reconstruction_error = 0;
};

/// Constructive membership: solves the feasibility LP (24 nonnegative
/// weights, 9 entry equalities plus normalization) with a dense phase-one
/// simplex using Bland's rule. Returns nullopt when infeasible; throws
/// SolverFailureError if the 10000-pivot cap is hit.
std::optional<ConvexWeights> decompose(const Mat3 &m);

/// Agreement between the facet test and the LP, with a boundary band where
/// disagreement is adjudicated as "ambiguous" instead of an error.
struct CrossCheckReport {
    enum class Verdict { AgreeInside, AgreeOutside, BoundaryAmbiguous, Disagree };
    Verdict verdict = Verdict::AgreeInside;
    bool membership_inside = true;
    bool lp_feasible = true;
    double max_facet_value = 0;
};

CrossCheckReport membership_cross_check(const Mat3 &m);

}  // namespace cliffpoly
