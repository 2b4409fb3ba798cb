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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/decompose.hpp"
#include "cliffpoly/sampling.hpp"
#include "cliffpoly/threshold.hpp"

using namespace cliffpoly;

namespace {

// Random point of the polytope: exponential draws normalized to a convex
// combination of the 24 vertices.
Mat3 random_interior(Rng &rng) {
    std::array<double, 24> w{};
    double total = 0;
    for (double &v : w) {
        v = -std::log(1.0 - rng.next_double() + 1e-300);
        total += v;
    }
    Mat3 m = Mat3::zero();
    const auto &cliffords = enumerate_cliffords();
    for (int i = 0; i < 24; i++) {
        m = m + (w[i] / total) * cliffords[i].matrix.as_mat3();
    }
    return m;
}

void check_valid_weights(const ConvexWeights &w, const Mat3 &target) {
    double sum = 0;
    Mat3 recon = Mat3::zero();
    const auto &cliffords = enumerate_cliffords();
    for (int i = 0; i < 24; i++) {
        CHECK(w.weights[i] >= 0.0);
        sum += w.weights[i];
        recon = recon + w.weights[i] * cliffords[i].matrix.as_mat3();
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
    CHECK(max_abs_diff(recon, target) < 1e-8);
    CHECK(w.reconstruction_error < 1e-8);
}

}  // namespace

TEST_CASE("vertices and the center decompose") {
    auto id = decompose(Mat3::identity());
    REQUIRE(id.has_value());
    check_valid_weights(*id, Mat3::identity());

    auto center = decompose(Mat3::zero());
    REQUIRE(center.has_value());
    check_valid_weights(*center, Mat3::zero());

    // The uniform mixture reconstructs the center: signed permutations cancel.
    Mat3 uniform = Mat3::zero();
    for (const CliffordElement &c : enumerate_cliffords()) {
        uniform = uniform + (1.0 / 24.0) * c.matrix.as_mat3();
    }
    CHECK(max_abs_entry(uniform) < 1e-15);
}

TEST_CASE("scaled identity leaves the polytope") {
    CHECK(!decompose(1.01 * Mat3::identity()).has_value());
    CHECK(!decompose(2.0 * Mat3::identity()).has_value());
}

TEST_CASE("random convex combinations are feasible with tight reconstruction") {
    Rng rng(31);
    for (int n = 0; n < 200; n++) {
        Mat3 m = random_interior(rng);
        auto w = decompose(m);
        REQUIRE(w.has_value());
        check_valid_weights(*w, m);
    }
}

TEST_CASE("rotations pushed just past their maximal facet are infeasible") {
    Rng rng(37);
    for (int n = 0; n < 200; n++) {
        Mat3 r = haar_rotation(rng);
        double v = polytope_membership(r).max_value;
        Mat3 outside = (1.05 / v) * r;
        CHECK(!decompose(outside).has_value());
        CHECK(!polytope_membership(outside).inside);
    }
}

TEST_CASE("feasibility is invariant under Clifford conjugation") {
    Rng rng(41);
    const auto &cliffords = enumerate_cliffords();
    for (int n = 0; n < 50; n++) {
        Mat3 m = random_interior(rng);
        Mat3 ml = cliffords[rng.next_u64() % 24].matrix.as_mat3() * m *
                  cliffords[rng.next_u64() % 24].matrix.as_mat3();
        CHECK(decompose(m).has_value() == decompose(ml).has_value());

        Mat3 r = haar_rotation(rng);
        Mat3 out = (1.05 / polytope_membership(r).max_value) * r;
        Mat3 outl = cliffords[rng.next_u64() % 24].matrix.as_mat3() * out *
                    cliffords[rng.next_u64() % 24].matrix.as_mat3();
        CHECK(decompose(out).has_value() == decompose(outl).has_value());
    }
}

TEST_CASE("cross-check agrees on clear cases") {
    CrossCheckReport inside = membership_cross_check(Mat3::identity());
    CHECK(inside.verdict == CrossCheckReport::Verdict::AgreeInside);

    CrossCheckReport outside = membership_cross_check(2.0 * Mat3::identity());
    CHECK(outside.verdict == CrossCheckReport::Verdict::AgreeOutside);
    CHECK(std::abs(outside.max_facet_value - 2.0) < 1e-12);
}

TEST_CASE("cross-check tolerates the exact threshold boundary") {
    // The pi/8 gate rescaled to its threshold sits exactly on the boundary.
    ThresholdReport rep = threshold_from_angles({0, std::numbers::pi / 8, 0});
    Mat3 boundary = (1.0 - rep.p_star) * rep.rotation;
    CrossCheckReport cc = membership_cross_check(boundary);
    CHECK((cc.verdict == CrossCheckReport::Verdict::AgreeInside ||
           cc.verdict == CrossCheckReport::Verdict::BoundaryAmbiguous));
}
