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
#include <map>
#include <numbers>

#include "cliffpoly/errors.hpp"
#include "cliffpoly/postselect.hpp"
#include "cliffpoly/sampling.hpp"
#include "cliffpoly/threshold.hpp"
#include "test_helpers.hpp"

using namespace cliffpoly;
using cliffpoly::testing::random_angles;

namespace {

const TwoQubitPauli kYX{Pauli::Y, Pauli::X};
const Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};

Unitary2 identity_gate() {
    return unitary_from_angles({0, 0, 0});
}

}  // namespace

TEST_CASE("identity gate, YX measurement, +1 outcome") {
    PostselectionResult res = postselect_oracle(identity_gate(), kYX, +1);
    CHECK(std::abs(res.accept_probability - 0.5) < 1e-12);
    CHECK(std::abs(res.bloch.x) < 1e-12);
    CHECK(std::abs(res.bloch.y) < 1e-12);
    CHECK(std::abs(res.bloch.z + 1.0) < 1e-12);
    // An octahedron boundary point: |y| + |z| = 1.
    CHECK(std::abs(res.bloch.l1() - 1.0) < 1e-12);

    BlochVector formula = postselect_formula_yx(Mat3::identity());
    CHECK(std::abs(formula.x) < 1e-15);
    CHECK(std::abs(formula.y) < 1e-15);
    CHECK(std::abs(formula.z + 1.0) < 1e-15);
}

TEST_CASE("acceptance probabilities of complementary outcomes sum to 1") {
    Rng rng(101);
    for (int n = 0; n < 50; n++) {
        Unitary2 u = unitary_from_angles(random_angles(rng));
        for (Pauli a : kAxes) {
            for (Pauli b : kAxes) {
                double total = 0;
                for (int outcome : {+1, -1}) {
                    try {
                        total += postselect_oracle(u, {a, b}, outcome).accept_probability;
                    } catch (const ZeroProbabilityBranchError &) {
                        // The complementary branch then carries probability 1.
                    }
                }
                CHECK(std::abs(total - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("closed form matches the density-matrix oracle on the YX branch") {
    Rng rng(103);
    for (int n = 0; n < 1000; n++) {
        Unitary2 u = unitary_from_angles(random_angles(rng));
        Mat3 r = rotation_from_unitary(u).mat();
        PostselectionResult oracle = postselect_oracle(u, kYX, +1);
        BlochVector formula = postselect_formula_yx(r);
        CHECK(std::abs(oracle.bloch.x - formula.x) < 1e-12);
        CHECK(std::abs(oracle.bloch.y - formula.y) < 1e-12);
        CHECK(std::abs(oracle.bloch.z - formula.z) < 1e-12);
        // The reduced state lies in the YZ plane.
        CHECK(formula.x == 0.0);
        CHECK(oracle.bloch.l2() <= 1.0 + 1e-9);
    }
}

TEST_CASE("closed form matches the oracle on every measurement branch") {
    Rng rng(107);
    for (int n = 0; n < 100; n++) {
        Unitary2 u = unitary_from_angles(random_angles(rng));
        Mat3 r = rotation_from_unitary(u).mat();
        for (Pauli a : kAxes) {
            for (Pauli b : kAxes) {
                for (int outcome : {+1, -1}) {
                    PostselectionResult oracle = postselect_oracle(u, {a, b}, outcome);
                    // Normalizing by a tiny acceptance probability amplifies
                    // double rounding; keep the comparison away from that.
                    if (oracle.accept_probability < 1e-4) continue;
                    BlochVector formula = postselect_formula(r, {a, b}, outcome);
                    CHECK(std::abs(oracle.bloch.x - formula.x) < 1e-10);
                    CHECK(std::abs(oracle.bloch.y - formula.y) < 1e-10);
                    CHECK(std::abs(oracle.bloch.z - formula.z) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("postselected states factor as logical x stabilizer") {
    Rng rng(109);
    for (int n = 0; n < 30; n++) {
        Unitary2 u = unitary_from_angles(random_angles(rng));
        for (Pauli a : kAxes) {
            for (Pauli b : kAxes) {
                for (int outcome : {+1, -1}) {
                    CHECK(postselect_product_residual(u, {a, b}, outcome) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("zero-probability branches are reported, not divided by") {
    // For the identity gate c_XX = 1, so the XX -1 branch cannot herald.
    CHECK_THROWS_AS(postselect_oracle(identity_gate(), {Pauli::X, Pauli::X}, -1),
                    ZeroProbabilityBranchError);
    // Same condition through the closed form: denominator 1 + c_YX with
    // c_YX = -1 at a gate whose rotation has R12 = 1.
    Mat3 r = Mat3{{0, 1, 0, -1, 0, 0, 0, 0, 1}};
    CHECK_THROWS_AS(postselect_formula_yx(r), ZeroProbabilityBranchError);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(postselect_oracle(identity_gate(), {Pauli::I, Pauli::X}, +1),
                    std::invalid_argument);
    CHECK_THROWS_AS(postselect_oracle(identity_gate(), kYX, 0), std::invalid_argument);
    CHECK_THROWS_AS(postselect_oracle(identity_gate(), kYX, 2), std::invalid_argument);
}

TEST_CASE("octahedron membership and the magic directions") {
    CHECK(octahedron_inside({0, 0, 1}));
    CHECK(octahedron_inside({0.3, -0.3, 0.4}));
    double h = 1.0 / std::sqrt(2.0);
    BlochVector h_state{h, h, 0};
    CHECK(!octahedron_inside(h_state));
    CHECK(std::abs(h_state.l1() - std::sqrt(2.0)) < 1e-15);
    double t = 1.0 / std::sqrt(3.0);
    BlochVector t_state{t, t, t};
    CHECK(!octahedron_inside(t_state));
    CHECK(std::abs(t_state.l1() - std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("the worked YX facet family maps to the I, X, Y, Z corrections") {
    const FacetSet &set = FacetSet::instance();
    struct Case {
        Mat3i facet;
        Pauli correction;
    };
    // The facet obtained directly from the YX reduction, then its three
    // Pauli-rotated siblings.
    const Case cases[4] = {
        {Mat3i{{0, 1, 0, -1, 0, -1, 1, 0, -1}}, Pauli::I},
        {Mat3i{{0, 1, 0, 1, 0, 1, -1, 0, 1}}, Pauli::X},
        {Mat3i{{0, 1, 0, 1, 0, -1, 1, 0, 1}}, Pauli::Y},
        {Mat3i{{0, 1, 0, -1, 0, 1, -1, 0, -1}}, Pauli::Z},
    };
    for (const Case &c : cases) {
        int id = set.id_of(c.facet);
        REQUIRE(id >= 0);
        FacetMeasurement fm = b_facet_measurement(set.facet(id));
        CHECK(fm.meas.first == Pauli::Y);
        CHECK(fm.meas.second == Pauli::X);
        CHECK(fm.outcome == +1);
        CHECK(fm.correction == c.correction);
    }
}

TEST_CASE("facet-to-measurement lookup is total on B and rejects A") {
    int b_count = 0;
    std::map<std::tuple<int, int, int, int>, int> triple_use;
    for (const Facet &f : enumerate_facets()) {
        if (f.kind != FacetKind::B) {
            CHECK_THROWS_AS(b_facet_measurement(f), std::invalid_argument);
            continue;
        }
        FacetMeasurement fm = b_facet_measurement(f);
        b_count++;
        triple_use[{static_cast<int>(fm.meas.first), static_cast<int>(fm.meas.second), fm.outcome,
                    static_cast<int>(fm.correction)}]++;
    }
    CHECK(b_count == 72);
    CHECK(triple_use.size() == 72);  // bijection: every triple used exactly once
}

TEST_CASE("per-facet equivalence: facet side and corrected edge side agree") {
    Rng rng(113);
    const FacetSet &set = FacetSet::instance();
    for (int n = 0; n < 200; n++) {
        Mat3 r = haar_rotation(rng);
        for (const Facet &f : set.facets()) {
            if (f.kind != FacetKind::B) continue;
            EquivalenceRecord rec = facet_violation_equivalence(r, f);
            CHECK(rec.bloch_corrected.x == 0.0);
            if (std::abs(rec.facet_value - 1.0) > 1e-9 && std::abs(rec.edge_value - 1.0) > 1e-9) {
                CHECK(rec.facet_violated == rec.edge_violated);
            }
            // A violated facet forces the corrected state past the edge and
            // out of the octahedron: the summary pipeline.
            if (rec.facet_value > 1.0 + 1e-9) {
                CHECK(rec.edge_value > 1.0);
                CHECK(rec.l1_corrected > 1.0);
            }
        }
    }
}

TEST_CASE("pi/8 gate: the witnessing facet heralds a magic direction") {
    // The threshold witness of the pi/8 gate corresponds to a ZZ measurement
    // postselected on +1 (which heralds with certainty for a z-rotation) and
    // a Z correction; the reduced state lands on the |y| + |z| = sqrt(2)
    // octahedron edge direction.
    ThresholdReport rep = threshold_from_angles({0, std::numbers::pi / 8, 0});
    EquivalenceRecord rec = facet_violation_equivalence(rep.rotation, rep.witness);
    CHECK(rec.measurement.meas.first == Pauli::Z);
    CHECK(rec.measurement.meas.second == Pauli::Z);
    CHECK(rec.measurement.outcome == +1);
    CHECK(rec.measurement.correction == Pauli::Z);

    const double sqrt2 = std::sqrt(2.0);
    CHECK(std::abs(rec.facet_value - (2.0 * sqrt2 - 1.0)) < 1e-12);
    CHECK(std::abs(rec.edge_value - sqrt2) < 1e-12);
    CHECK(std::abs(rec.l1_corrected - sqrt2) < 1e-12);
    CHECK(std::abs(rec.bloch_corrected.y - sqrt2 / 2) < 1e-12);
    CHECK(std::abs(rec.bloch_corrected.z - sqrt2 / 2) < 1e-12);

    Unitary2 gate = unitary_from_angles({0, std::numbers::pi / 8, 0});
    PostselectionResult oracle = postselect_oracle(gate, rec.measurement.meas, +1);
    CHECK(std::abs(oracle.accept_probability - 1.0) < 1e-12);
    CHECK(std::abs(oracle.bloch.y + sqrt2 / 2) < 1e-12);
    CHECK(std::abs(oracle.bloch.z - sqrt2 / 2) < 1e-12);
    CHECK(!octahedron_inside(oracle.bloch));
}

TEST_CASE("family-level equivalence: octahedron exit iff some family facet is violated") {
    Rng rng(127);
    // Group the 72 facets into the 18 (measurement, outcome) families.
    std::map<std::tuple<int, int, int>, std::vector<int>> families;
    for (const Facet &f : enumerate_facets()) {
        if (f.kind != FacetKind::B) continue;
        FacetMeasurement fm = b_facet_measurement(f);
        families[{static_cast<int>(fm.meas.first), static_cast<int>(fm.meas.second), fm.outcome}]
            .push_back(f.id);
    }
    REQUIRE(families.size() == 18);
    const FacetSet &set = FacetSet::instance();
    for (int n = 0; n < 200; n++) {
        Mat3 r = haar_rotation(rng);
        for (const auto &[key, ids] : families) {
            REQUIRE(ids.size() == 4);
            TwoQubitPauli meas{static_cast<Pauli>(std::get<0>(key)), static_cast<Pauli>(std::get<1>(key))};
            BlochVector bloch = postselect_formula(r, meas, std::get<2>(key));
            double family_max = -1e300;
            for (int id : ids) {
                family_max = std::max(family_max, facet_inner_product(r, set.facet(id)));
            }
            if (std::abs(bloch.l1() - 1.0) > 1e-9 && std::abs(family_max - 1.0) > 1e-9) {
                CHECK((bloch.l1() > 1.0) == (family_max > 1.0));
            }
        }
    }
}
