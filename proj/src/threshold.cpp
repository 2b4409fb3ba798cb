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

#include "cliffpoly/threshold.hpp"

#include <numbers>
#include <stdexcept>
#include <thread>

namespace cliffpoly {

namespace {

constexpr double kTieBand = 1e-12;

}  // namespace

ThresholdReport threshold(const Rotation3 &r) {
    const FacetSet &set = FacetSet::instance();
    const Mat3 &m = r.mat();
    double best = -1e300;
    for (const Facet &f : set.facets()) {
        double v = frobenius(m, f.matrix);
        if (v > best) best = v;
    }
    // Witness: B-type preferred within the tie band (B violation is the
    // distillable direction), then lowest id.
    int witness = -1;
    for (const Facet &f : set.facets()) {
        if (f.kind != FacetKind::B) continue;
        if (frobenius(m, f.matrix) >= best - kTieBand) {
            witness = f.id;
            break;
        }
    }
    if (witness < 0) {
        for (const Facet &f : set.facets()) {
            if (frobenius(m, f.matrix) >= best - kTieBand) {
                witness = f.id;
                break;
            }
        }
    }
    ThresholdReport rep;
    rep.rotation = m;
    rep.max_inner_product = best;
    rep.p_star = best <= 1.0 + kTieBand ? 0.0 : 1.0 - 1.0 / best;
    rep.witness = set.facet(witness);
    rep.witness_kind = rep.witness.kind;
    return rep;
}

ThresholdReport threshold_from_angles(const GateAngles &angles) {
    return threshold(rotation_from_angles(angles));
}

void threshold_survey(const GridSpec &grid, int workers,
                      const std::function<void(const SurveyRow &)> &sink) {
    if (grid.n_theta < 1 || grid.n_gamma < 1 || grid.n_delta < 1) {
        throw std::invalid_argument("threshold_survey: grid sizes must be >= 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("threshold_survey: workers must be >= 1");
    }
    const long long total =
        static_cast<long long>(grid.n_theta) * grid.n_gamma * grid.n_delta;
    const double two_pi = 2.0 * std::numbers::pi;
    auto row_at = [&](long long index) {
        int k = static_cast<int>(index % grid.n_delta);
        int j = static_cast<int>((index / grid.n_delta) % grid.n_gamma);
        int i = static_cast<int>(index / (static_cast<long long>(grid.n_delta) * grid.n_gamma));
        GateAngles a{two_pi * i / grid.n_theta, two_pi * j / grid.n_gamma, two_pi * k / grid.n_delta};
        ThresholdReport rep = threshold_from_angles(a);
        return SurveyRow{a, rep.max_inner_product, rep.p_star, rep.witness.id, rep.witness_kind};
    };

    // Rows are computed in worker-sized blocks and emitted strictly in grid
    // order, so output bytes never depend on the worker count and memory
    // stays bounded for large grids.
    const long long block = std::max<long long>(1024, workers * 256);
    std::vector<SurveyRow> buf;
    for (long long start = 0; start < total; start += block) {
        long long n = std::min(block, total - start);
        buf.assign(static_cast<size_t>(n), SurveyRow{});
        if (workers == 1) {
            for (long long k = 0; k < n; k++) buf[static_cast<size_t>(k)] = row_at(start + k);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; w++) {
                long long lo = n * w / workers, hi = n * (w + 1) / workers;
                pool.emplace_back([&, lo, hi] {
                    for (long long k = lo; k < hi; k++) buf[static_cast<size_t>(k)] = row_at(start + k);
                });
            }
            for (auto &t : pool) t.join();
        }
        for (const SurveyRow &row : buf) sink(row);
    }
}

std::vector<SurveyRow> threshold_survey(const GridSpec &grid) {
    std::vector<SurveyRow> rows;
    threshold_survey(grid, 1, [&](const SurveyRow &r) { rows.push_back(r); });
    return rows;
}

}  // namespace cliffpoly
