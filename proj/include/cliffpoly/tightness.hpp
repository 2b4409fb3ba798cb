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
#include <cstdint>
#include <string>
#include <vector>

#include "cliffpoly/linalg.hpp"
#include "cliffpoly/so3.hpp"

namespace cliffpoly {

/// Margins below this count as violations of the dominance theorem.
inline constexpr double kViolationTol = -1e-9;

/// A Clifford-symmetry reduction of a rotation to the frame the dominance
/// proof argues in: canonical_rotation = C_left * (R or R^T) * C_right, the
/// all-ones-first-column A facet is maximal among the 48 A/AT facets (within
/// 1e-12), and the A'_1 perturbation (extra -1 at position (1,2)) is maximal
/// among the 12 A'_i. Consequently the first column is nonnegative and the
/// (1,2) entry is nonpositive with the largest magnitude outside column 1.
struct CanonicalizationRecord {
    int left = 0;
    int right = 0;
    bool transposed = false;
    Mat3 canonical_rotation;
};

/// Scans the 24 x 24 x {plain, transposed} transformations in (left, right,
/// transpose-flag) order and returns the first that satisfies both maximality
/// conditions. The A-maximality tie band is 1e-12; A'_1 maximality is tested
/// with exact comparisons (signed permutations move entries without rounding,
/// and a loose band here would let the key-inequality margin dip by the
/// square root of the band near degenerate corners). Throws
/// TheoremViolationError if no transformation qualifies; that would falsify
/// the symmetry argument and must never happen for a genuine rotation.
CanonicalizationRecord canonicalize(const Rotation3 &r);

/// The pair of 2-vectors the norm lemma compares: u = (R11, R12),
/// v = (R23, R33). Rows and columns of a rotation are unit vectors, so
/// ||u||_2 = ||v||_2 = sqrt(1 - R13^2) automatically.
struct TwoVectorPair {
    std::array<double, 2> u{};
    std::array<double, 2> v{};

    static TwoVectorPair from_canonical(const Mat3 &rc) {
        return TwoVectorPair{{rc(0, 0), rc(0, 1)}, {rc(1, 2), rc(2, 2)}};
    }
};

/// The four sign patterns a canonical rotation can realize. Entries within
/// 1e-9 of zero match either sign. Returns 1..4, or 0 for no match (counted
/// as a violation by the verification driver).
int check_sign_pattern(const Mat3 &canonical);

struct KeyInequality {
    double margin = 0;         // Rc . (B - A) for the canonical facet pair
    double l1_difference = 0;  // ||v||_1 - ||u||_1
};

/// Both routes to the key inequality; equal up to sign-degenerate entries.
KeyInequality key_inequality(const Mat3 &canonical);

/// Evaluates Rc . (B - A) for the canonical facets and checks it against the
/// independently computed ||v||_1 - ||u||_1 (equal within 1e-12). Returns the
/// margin; throws TheoremViolationError when it falls below kViolationTol or
/// the two routes disagree.
double verify_key_inequality(const Mat3 &canonical);

/// maxB - maxA over the full facet system; the dominance theorem predicts
/// gap >= 0 for every rotation.
struct DominanceRecord {
    double max_a = 0;
    double max_b = 0;
    double gap = 0;
};

DominanceRecord verify_global_dominance(const Mat3 &r);

/// Monte Carlo check of the planar norm lemma: for 2-vectors of equal L2
/// norm, the one with the larger L-infinity norm has the smaller L1 norm.
struct NormLemmaStats {
    long long samples = 0;
    long long violations = 0;
    double min_slack = 0;  // min over samples of ||v||_1 - ||u||_1
};

NormLemmaStats verify_norm_lemma(long long samples, uint64_t seed);

/// Deterministic tie-heavy inputs: the 24 vertices themselves, fine
/// coordinate-axis angle grids (including exact pi/4 multiples), axis-rotation
/// compositions, and rotations within 1e-6 of every Clifford vertex.
std::vector<Mat3> stress_rotations();

struct Violation {
    long long sample_index = 0;  // >= sample count marks a stress input
    std::string type;
    double value = 0;
};

struct VerificationReport {
    long long samples = 0;
    double min_gap = 0;
    double min_margin = 0;
    std::array<long long, 4> sign_pattern_histogram{};
    std::vector<Violation> violations;
};

struct VerifyConfig {
    long long samples = 1000000;
    uint64_t seed = 0;
    int workers = 1;
    bool include_stress = false;
};

/// Runs the full per-rotation check (dominance gap, canonicalization, sign
/// pattern, key inequality with its cross-route identity) over Haar samples
/// and, optionally, the stress set. Sample index streams make the report
/// independent of the worker count.
VerificationReport run_verification(const VerifyConfig &config);

}  // namespace cliffpoly
