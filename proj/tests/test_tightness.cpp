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
#include "cliffpoly/errors.hpp"
#include "cliffpoly/facets.hpp"
#include "cliffpoly/sampling.hpp"
#include "cliffpoly/threshold.hpp"
#include "cliffpoly/tightness.hpp"

using namespace cliffpoly;

namespace {

const double kPi = std::numbers::pi;

void check_canonical_invariants(const Mat3 &r, const CanonicalizationRecord &rec) {
    const auto &cliffords = enumerate_cliffords();
    Mat3 base = rec.transposed ? r.transposed() : r;
    Mat3 rebuilt = cliffords[rec.left].matrix.as_mat3() * base * cliffords[rec.right].matrix.as_mat3();
    CHECK(max_abs_diff(rebuilt, rec.canonical_rotation) < 1e-12);

    const Mat3 &rc = rec.canonical_rotation;
    // First column nonnegative, (1,2) nonpositive.
    for (int i = 0; i < 3; i++) CHECK(rc(i, 0) >= -1e-12);
    CHECK(rc(0, 1) <= 1e-12);

    // The canonical A facet attains the A / AT maximum.
    double col0 = rc(0, 0) + rc(1, 0) + rc(2, 0);
    CHECK(col0 >= FacetSet::instance().max_over_a_like(rc).value - 1e-12);

    // |R12| dominates every entry outside the first column.
    for (int i = 0; i < 3; i++) {
        for (int c = 1; c < 3; c++) {
            CHECK(-rc(0, 1) >= std::abs(rc(i, c)) - 1e-12);
        }
    }
}

}  // namespace

TEST_CASE("canonicalize the identity deterministically") {
    CanonicalizationRecord rec = canonicalize(Rotation3(Mat3::identity()));
    check_canonical_invariants(Mat3::identity(), rec);
    CanonicalizationRecord again = canonicalize(Rotation3(Mat3::identity()));
    CHECK(rec.left == again.left);
    CHECK(rec.right == again.right);
    CHECK(rec.transposed == again.transposed);
    // Scan order (left, right, transpose) pins the first qualifying record.
    CHECK(rec.left == 0);
    CHECK(!rec.transposed);
    Mat3 expect{{0, -1, 0, 0, 0, -1, 1, 0, 0}};
    CHECK(max_abs_diff(rec.canonical_rotation, expect) == 0.0);
}

TEST_CASE("canonicalize Haar samples and check the frame invariants") {
    Rng rng(211);
    for (int n = 0; n < 1000; n++) {
        Mat3 r = haar_rotation(rng);
        CanonicalizationRecord rec = canonicalize(Rotation3(r));
        check_canonical_invariants(r, rec);
    }
}

TEST_CASE("SO(3) cofactor identity used by the proof") {
    Rng rng(223);
    for (int n = 0; n < 1000; n++) {
        Mat3 r = haar_rotation(rng);
        CHECK(std::abs(r(0, 1) + (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0))) < 1e-9);
    }
}

TEST_CASE("the two-vector pair has matching L2 norms") {
    Rng rng(227);
    for (int n = 0; n < 300; n++) {
        CanonicalizationRecord rec = canonicalize(Rotation3(haar_rotation(rng)));
        TwoVectorPair uv = TwoVectorPair::from_canonical(rec.canonical_rotation);
        double nu = std::hypot(uv.u[0], uv.u[1]);
        double nv = std::hypot(uv.v[0], uv.v[1]);
        CHECK(std::abs(nu - nv) < 1e-9);
    }
}

TEST_CASE("sign patterns cover every canonical rotation") {
    Rng rng(229);
    for (int n = 0; n < 1000; n++) {
        CanonicalizationRecord rec = canonicalize(Rotation3(haar_rotation(rng)));
        int pattern = check_sign_pattern(rec.canonical_rotation);
        CHECK(pattern >= 1);
        CHECK(pattern <= 4);
    }
    // Zero entries wildcard-match: an axis rotation canonicalizes with exact
    // zeros in sign-constrained positions.
    CanonicalizationRecord rec = canonicalize(Rotation3(axis_rotation(2, 0.3)));
    CHECK(check_sign_pattern(rec.canonical_rotation) >= 1);
}

TEST_CASE("key inequality: equality at the identity matrix") {
    KeyInequality k = key_inequality(Mat3::identity());
    CHECK(k.margin == 0.0);
    CHECK(k.l1_difference == 0.0);
    CHECK(verify_key_inequality(Mat3::identity()) == 0.0);
}

TEST_CASE("key inequality holds with both routes agreeing") {
    Rng rng(233);
    for (int n = 0; n < 2000; n++) {
        CanonicalizationRecord rec = canonicalize(Rotation3(haar_rotation(rng)));
        double margin = verify_key_inequality(rec.canonical_rotation);
        CHECK(margin >= -1e-9);
        KeyInequality k = key_inequality(rec.canonical_rotation);
        CHECK(std::abs(k.margin - k.l1_difference) < 1e-12);
    }
    // The pi/8 rotation violates an A facet strictly, so its canonical margin
    // is strictly positive.
    CanonicalizationRecord rec = canonicalize(rotation_from_angles({0, kPi / 8, 0}));
    CHECK(verify_key_inequality(rec.canonical_rotation) > 1e-6);
}

TEST_CASE("global dominance at the worked points") {
    DominanceRecord id = verify_global_dominance(Mat3::identity());
    CHECK(std::abs(id.max_a - 1.0) < 1e-12);
    CHECK(std::abs(id.max_b - 1.0) < 1e-12);
    CHECK(std::abs(id.gap) < 1e-12);

    DominanceRecord pi8 = verify_global_dominance(rotation_from_angles({0, kPi / 8, 0}).mat());
    CHECK(std::abs(pi8.max_a - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(pi8.max_b - (2.0 * std::sqrt(2.0) - 1.0)) < 1e-12);
    CHECK(std::abs(pi8.gap - (std::sqrt(2.0) - 1.0)) < 1e-12);
}

TEST_CASE("constructive route: the canonical B maps back into the facet set") {
    Rng rng(239);
    const FacetSet &set = FacetSet::instance();
    const auto &cliffords = enumerate_cliffords();
    const Mat3i canonical_b{{0, 1, 0, 1, 0, -1, 1, 0, 1}};
    for (int n = 0; n < 500; n++) {
        Mat3 r = haar_rotation(rng);
        CanonicalizationRecord rec = canonicalize(Rotation3(r));
        Mat3i mapped = cliffords[rec.left].matrix.transposed() *
                       (canonical_b * cliffords[rec.right].matrix.transposed());
        if (rec.transposed) mapped = mapped.transposed();
        int id = set.id_of(mapped);
        REQUIRE(id >= 0);
        CHECK(set.facet(id).kind == FacetKind::B);
        // That facet witnesses dominance for the original rotation.
        double b_value = frobenius(r, mapped);
        double max_a = set.max_over_a_like(r).value;
        CHECK(b_value >= max_a - 1e-9);
    }
}

TEST_CASE("dominance scales along the depolarizing ray") {
    Rng rng(241);
    const FacetSet &set = FacetSet::instance();
    const auto &cliffords = enumerate_cliffords();
    const Mat3i canonical_b{{0, 1, 0, 1, 0, -1, 1, 0, 1}};
    for (int n = 0; n < 10000; n++) {
        Rotation3 r = Rotation3(haar_rotation(rng));
        CanonicalizationRecord rec = canonicalize(r);
        Mat3i mapped = cliffords[rec.left].matrix.transposed() *
                       (canonical_b * cliffords[rec.right].matrix.transposed());
        if (rec.transposed) mapped = mapped.transposed();
        for (double p : {0.0, 0.25, 0.45}) {
            Mat3 noisy = depolarize(r, p);
            double max_a = set.max_over_a_like(noisy).value;
            if (max_a > 1.0) {
                // Violating any A facet implies violating the constructed B.
                CHECK(frobenius(noisy, mapped) >= max_a - 1e-9);
                CHECK(frobenius(noisy, mapped) > 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("norm lemma: extremal example and Monte Carlo") {
    // u = (1, 0) has maximal L-infinity norm on the unit circle; v at 45
    // degrees has minimal L-infinity and maximal L1.
    double h = 1.0 / std::sqrt(2.0);
    CHECK(std::max(std::abs(h), std::abs(h)) <= 1.0);
    CHECK(2 * h >= 1.0);

    NormLemmaStats stats = verify_norm_lemma(100000, 4242);
    CHECK(stats.samples == 100000);
    CHECK(stats.violations == 0);
    CHECK(stats.min_slack >= -1e-12);
    CHECK_THROWS_AS(verify_norm_lemma(0, 1), std::invalid_argument);
}

TEST_CASE("stress rotations are genuine rotations") {
    std::vector<Mat3> stress = stress_rotations();
    CHECK(stress.size() > 5000);
    for (size_t i = 0; i < stress.size(); i += 97) {
        CHECK(is_special_orthogonal(stress[i], 1e-9));
    }
}

TEST_CASE("verification run: clean report, reproducible across worker counts") {
    VerifyConfig config{20000, 987, 1, true};
    VerificationReport rep = run_verification(config);
    CHECK(rep.samples == 20000 + static_cast<long long>(stress_rotations().size()));
    CHECK(rep.violations.empty());
    CHECK(rep.min_gap >= -1e-9);
    CHECK(rep.min_margin >= -1e-9);
    long long total = 0;
    for (long long h : rep.sign_pattern_histogram) total += h;
    CHECK(total == rep.samples);

    VerifyConfig parallel = config;
    parallel.workers = 3;
    VerificationReport rep3 = run_verification(parallel);
    CHECK(rep3.min_gap == rep.min_gap);
    CHECK(rep3.min_margin == rep.min_margin);
    CHECK(rep3.sign_pattern_histogram == rep.sign_pattern_histogram);
    CHECK(rep3.violations.size() == rep.violations.size());
}
