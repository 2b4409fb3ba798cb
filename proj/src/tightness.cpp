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

#include "cliffpoly/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/errors.hpp"
#include "cliffpoly/facets.hpp"
#include "cliffpoly/sampling.hpp"

namespace cliffpoly {

namespace {

constexpr double kTieBand = 1e-12;

const Mat3i kCanonicalA{{1, 0, 0, 1, 0, 0, 1, 0, 0}};
const Mat3i kCanonicalB{{0, 1, 0, 1, 0, -1, 1, 0, 1}};

// The four admissible sign patterns of a canonical rotation.
constexpr int kPatterns[4][9] = {
    {+1, -1, +1, +1, +1, -1, +1, +1, +1},
    {+1, -1, -1, +1, +1, -1, +1, +1, +1},
    {+1, -1, -1, +1, +1, -1, +1, -1, +1},
    {+1, -1, +1, +1, -1, -1, +1, +1, +1},
};

struct CanonicalScan {
    int left = -1;
    int right = -1;
    bool transposed = false;
    Mat3 canonical;
};

// Largest column/row L1 norm; this is the maximum of R . F over the 48 A and
// AT facets (the best facet sign-matches one column or row).
double a_facet_target(const Mat3 &m) {
    double best = 0;
    for (int i = 0; i < 3; i++) {
        double col = std::abs(m(0, i)) + std::abs(m(1, i)) + std::abs(m(2, i));
        double row = std::abs(m(i, 0)) + std::abs(m(i, 1)) + std::abs(m(i, 2));
        best = std::max(best, std::max(col, row));
    }
    return best;
}

// Scans the 24 x 24 x {plain, transposed} Clifford transformations in (left,
// right, transpose) order for the first one where (a) the all-ones-first-
// column A facet attains the A/AT maximum within 1e-12 and (b) the (1,2)
// entry is nonpositive with magnitude >= every entry outside column 1. The
// (b) comparison is exact: signed permutations only move entries around, so
// float comparisons agree across candidates, and a tolerance here would let
// the downstream margin dip by its square root near degenerate corners.
bool canonical_scan(const Mat3 &r, CanonicalScan &out) {
    const CliffordGroup &group = CliffordGroup::instance();
    const double target = a_facet_target(r);

    struct Side {
        Mat3 m;
        double col_abs_max[3];
    };
    Side sides[2];
    sides[0].m = r;
    sides[1].m = r.transposed();
    for (Side &s : sides) {
        for (int c = 0; c < 3; c++) {
            s.col_abs_max[c] = std::max({std::abs(s.m(0, c)), std::abs(s.m(1, c)), std::abs(s.m(2, c))});
        }
    }

    // Column forms of the right factor: column k of X * C reads column
    // col_of[k] of X with sign sign_of[k].
    struct ColForm {
        int col_of[3];
        int sign_of[3];
    };
    static const std::vector<ColForm> col_forms = [] {
        std::vector<ColForm> forms(24);
        for (int i = 0; i < 24; i++) {
            const auto &rf = CliffordGroup::instance().row_form(i);
            for (int q = 0; q < 3; q++) {
                forms[i].col_of[rf.col[q]] = q;
                forms[i].sign_of[rf.col[q]] = rf.sign[q];
            }
        }
        return forms;
    }();

    for (int left = 0; left < 24; left++) {
        const auto &lf = group.row_form(left);
        for (int right = 0; right < 24; right++) {
            const ColForm &cf = col_forms[right];
            for (int t = 0; t < 2; t++) {
                const Side &s = sides[t];
                // Condition (a): first-column sum attains the A/AT maximum.
                const int src_col0 = cf.col_of[0];
                double col0_sum = 0;
                for (int i = 0; i < 3; i++) {
                    col0_sum += lf.sign[i] * s.m(lf.col[i], src_col0);
                }
                col0_sum *= cf.sign_of[0];
                if (col0_sum < target - kTieBand) continue;
                // Condition (b): entry (1,2) nonpositive and of maximal
                // magnitude outside column 1.
                const int src_col1 = cf.col_of[1];
                const int src_col2 = cf.col_of[2];
                double e12 = lf.sign[0] * cf.sign_of[1] * s.m(lf.col[0], src_col1);
                if (e12 > 0.0) continue;
                if (-e12 < std::max(s.col_abs_max[src_col1], s.col_abs_max[src_col2])) continue;

                out.left = left;
                out.right = right;
                out.transposed = t == 1;
                for (int i = 0; i < 3; i++) {
                    for (int k = 0; k < 3; k++) {
                        out.canonical(i, k) =
                            lf.sign[i] * cf.sign_of[k] * s.m(lf.col[i], cf.col_of[k]);
                    }
                }
                return true;
            }
        }
    }
    return false;
}

}  // namespace

CanonicalizationRecord canonicalize(const Rotation3 &r) {
    CanonicalScan scan;
    if (!canonical_scan(r.mat(), scan)) {
        throw TheoremViolationError("canonicalize: no Clifford transformation reaches the canonical frame");
    }
    return {scan.left, scan.right, scan.transposed, scan.canonical};
}

int check_sign_pattern(const Mat3 &canonical) {
    constexpr double kZeroBand = 1e-9;
    for (int p = 0; p < 4; p++) {
        bool ok = true;
        for (int k = 0; k < 9 && ok; k++) {
            double e = canonical.e[k];
            if (std::abs(e) <= kZeroBand) continue;  // boundary entries match either sign
            ok = (e > 0) == (kPatterns[p][k] > 0);
        }
        if (ok) return p + 1;
    }
    return 0;
}

KeyInequality key_inequality(const Mat3 &rc) {
    KeyInequality k;
    k.margin = frobenius(rc, Mat3i{{-1, 1, 0, 0, 0, -1, 0, 0, 1}});  // B - A
    TwoVectorPair uv = TwoVectorPair::from_canonical(rc);
    k.l1_difference = std::abs(uv.v[0]) + std::abs(uv.v[1]) - std::abs(uv.u[0]) - std::abs(uv.u[1]);
    return k;
}

double verify_key_inequality(const Mat3 &canonical) {
    KeyInequality k = key_inequality(canonical);
    if (std::abs(k.margin - k.l1_difference) > 1e-12) {
        throw TheoremViolationError("verify_key_inequality: matrix and norm routes disagree");
    }
    if (k.margin < kViolationTol) {
        throw TheoremViolationError("verify_key_inequality: margin below -1e-9");
    }
    return k.margin;
}

namespace {

// Kind-separated flat facet tables for the hot dominance scan.
struct FlatFacets {
    std::vector<double> a;  // 48 x 9
    std::vector<double> b;  // 72 x 9
};

const FlatFacets &flat_facets() {
    static const FlatFacets flat = [] {
        FlatFacets f;
        for (const Facet &facet : FacetSet::instance().facets()) {
            auto &dst = facet.kind == FacetKind::B ? f.b : f.a;
            for (int v : facet.matrix.e) dst.push_back(static_cast<double>(v));
        }
        return f;
    }();
    return flat;
}

double scan_max(const Mat3 &m, const std::vector<double> &flat) {
    double best = -1e300;
    for (size_t o = 0; o < flat.size(); o += 9) {
        double v = 0;
        for (int k = 0; k < 9; k++) v += m.e[k] * flat[o + k];
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

DominanceRecord verify_global_dominance(const Mat3 &r) {
    const FlatFacets &flat = flat_facets();
    DominanceRecord rec;
    rec.max_a = scan_max(r, flat.a);
    rec.max_b = scan_max(r, flat.b);
    rec.gap = rec.max_b - rec.max_a;
    return rec;
}

NormLemmaStats verify_norm_lemma(long long samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_norm_lemma: samples must be >= 1");
    NormLemmaStats stats;
    stats.samples = samples;
    stats.min_slack = 1e300;
    for (long long i = 0; i < samples; i++) {
        Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
        double radius = rng.next_double() * 2.0 + 1e-3;
        double alpha = rng.next_angle();
        double beta = rng.next_angle();
        double u[2] = {radius * std::cos(alpha), radius * std::sin(alpha)};
        double v[2] = {radius * std::cos(beta), radius * std::sin(beta)};
        double u_inf = std::max(std::abs(u[0]), std::abs(u[1]));
        double v_inf = std::max(std::abs(v[0]), std::abs(v[1]));
        if (u_inf < v_inf) {
            std::swap(u[0], v[0]);
            std::swap(u[1], v[1]);
        }
        double slack = std::abs(v[0]) + std::abs(v[1]) - std::abs(u[0]) - std::abs(u[1]);
        stats.min_slack = std::min(stats.min_slack, slack);
        if (slack < -1e-12) stats.violations++;
    }
    return stats;
}

std::vector<Mat3> stress_rotations() {
    std::vector<Mat3> out;
    const auto &cliffords = CliffordGroup::instance().elements();
    for (const CliffordElement &c : cliffords) out.push_back(c.matrix.as_mat3());
    const double two_pi = 2.0 * std::numbers::pi;
    for (int axis = 0; axis < 3; axis++) {
        for (int k = 0; k < 720; k++) out.push_back(axis_rotation(axis, two_pi * k / 720));
    }
    for (int k = 0; k < 48; k++) {
        for (int l = 0; l < 48; l++) {
            out.push_back(axis_rotation(0, two_pi * k / 48) * axis_rotation(2, two_pi * l / 48));
            out.push_back(axis_rotation(2, two_pi * k / 48) * axis_rotation(1, two_pi * l / 48));
        }
    }
    for (const CliffordElement &c : cliffords) {
        Mat3 cm = c.matrix.as_mat3();
        for (int axis = 0; axis < 3; axis++) {
            for (double sign : {1.0, -1.0}) {
                Mat3 wiggle = axis_rotation(axis, sign * 1e-6);
                out.push_back(cm * wiggle);
                out.push_back(wiggle * cm);
            }
        }
    }
    return out;
}

namespace {

struct Accumulator {
    double min_gap = 1e300;
    double min_margin = 1e300;
    std::array<long long, 4> hist{};
    std::vector<Violation> violations;

    void merge(const Accumulator &other) {
        min_gap = std::min(min_gap, other.min_gap);
        min_margin = std::min(min_margin, other.min_margin);
        for (int i = 0; i < 4; i++) hist[i] += other.hist[i];
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

void check_rotation(const Mat3 &r, long long index, Accumulator &acc) {
    DominanceRecord dom = verify_global_dominance(r);
    acc.min_gap = std::min(acc.min_gap, dom.gap);
    if (dom.gap < kViolationTol) {
        acc.violations.push_back({index, "dominance_gap", dom.gap});
    }
    CanonicalScan scan;
    if (!canonical_scan(r, scan)) {
        acc.violations.push_back({index, "canonicalize", 0.0});
        return;
    }
    int pattern = check_sign_pattern(scan.canonical);
    if (pattern == 0) {
        acc.violations.push_back({index, "sign_pattern", 0.0});
    } else {
        acc.hist[pattern - 1]++;
    }
    KeyInequality k = key_inequality(scan.canonical);
    acc.min_margin = std::min(acc.min_margin, k.margin);
    if (k.margin < kViolationTol) {
        acc.violations.push_back({index, "key_inequality", k.margin});
    }
    if (std::abs(k.margin - k.l1_difference) > 1e-12) {
        acc.violations.push_back({index, "margin_identity", k.margin - k.l1_difference});
    }
}

}  // namespace

VerificationReport run_verification(const VerifyConfig &config) {
    if (config.samples < 0) throw std::invalid_argument("run_verification: negative sample count");
    if (config.workers < 1) throw std::invalid_argument("run_verification: workers must be >= 1");

    std::vector<Mat3> stress;
    if (config.include_stress) stress = stress_rotations();
    const long long total = config.samples + static_cast<long long>(stress.size());

    auto process_range = [&](long long lo, long long hi, Accumulator &acc) {
        for (long long i = lo; i < hi; i++) {
            if (i < config.samples) {
                Rng rng = Rng::stream(config.seed, static_cast<uint64_t>(i));
                check_rotation(haar_rotation(rng), i, acc);
            } else {
                check_rotation(stress[static_cast<size_t>(i - config.samples)], i, acc);
            }
        }
    };

    Accumulator result;
    if (config.workers == 1) {
        process_range(0, total, result);
    } else {
        std::vector<Accumulator> parts(static_cast<size_t>(config.workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < config.workers; w++) {
            long long lo = total * w / config.workers;
            long long hi = total * (w + 1) / config.workers;
            pool.emplace_back([&, lo, hi, w] { process_range(lo, hi, parts[static_cast<size_t>(w)]); });
        }
        for (auto &t : pool) t.join();
        for (const Accumulator &p : parts) result.merge(p);
    }
    std::sort(result.violations.begin(), result.violations.end(),
              [](const Violation &a, const Violation &b) { return a.sample_index < b.sample_index; });

    VerificationReport report;
    report.samples = total;
    report.min_gap = result.min_gap;
    report.min_margin = result.min_margin;
    report.sign_pattern_histogram = result.hist;
    report.violations = std::move(result.violations);
    return report;
}

}  // namespace cliffpoly
