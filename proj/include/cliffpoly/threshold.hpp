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

#include <functional>
#include <vector>

#include "cliffpoly/facets.hpp"
#include "cliffpoly/so3.hpp"

namespace cliffpoly {

/// Tight depolarizing threshold of a gate: with v = max_F R.F, the rescaled
/// gate (1-p)R leaves the polytope exactly below p* = 1 - 1/v (clamped to 0
/// when v <= 1 + 1e-12, i.e. the gate is already a Clifford mixture).
struct ThresholdReport {
    Mat3 rotation;
    double max_inner_product = 0;
    double p_star = 0;
    Facet witness;
    FacetKind witness_kind = FacetKind::A;
};

/// Scans all 120 facets. Witness ties within 1e-12 of the maximum prefer a
/// B-type facet (B violation is what licenses distillation), then lowest id.
ThresholdReport threshold(const Rotation3 &r);

ThresholdReport threshold_from_angles(const GateAngles &angles);

/// Regular angle grid, each axis covering [0, 2*pi) with the endpoint
/// excluded. Rows are emitted row-major in (theta, gamma, delta) order.
struct GridSpec {
    int n_theta = 1;
    int n_gamma = 1;
    int n_delta = 1;
};

struct SurveyRow {
    GateAngles angles;
    double max_inner_product = 0;
    double p_star = 0;
    int witness_id = 0;
    FacetKind witness_kind = FacetKind::A;
};

/// Streams rows through `sink` in grid order without materializing the grid.
/// Rows may be computed by several workers; emission order is independent of
/// the worker count. Throws std::invalid_argument when a grid size is < 1.
void threshold_survey(const GridSpec &grid, int workers, const std::function<void(const SurveyRow &)> &sink);

/// Convenience wrapper collecting all rows.
std::vector<SurveyRow> threshold_survey(const GridSpec &grid);

}  // namespace cliffpoly
