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

#include "cliffpoly/facets.hpp"

#include <algorithm>
#include <set>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/errors.hpp"

namespace cliffpoly {

namespace {

const Mat3i kSeedA{{1, 0, 0, 1, 0, 0, 1, 0, 0}};
const Mat3i kSeedB{{0, 1, 0, 1, 0, -1, 1, 0, 1}};

FacetKind classify(const Mat3i &m) {
    int nonzero = 0;
    for (int v : m.e) nonzero += v != 0;
    if (nonzero == 5) return FacetKind::B;
    // Three nonzeros: a single +-1 column (A) or row (AT).
    for (int c = 0; c < 3; c++) {
        if (m(0, c) != 0 && m(1, c) != 0 && m(2, c) != 0) return FacetKind::A;
    }
    return FacetKind::AT;
}

}  // namespace

std::string_view facet_kind_name(FacetKind k) {
    switch (k) {
        case FacetKind::A: return "A";
        case FacetKind::AT: return "AT";
        default: return "B";
    }
}

FacetSet::FacetSet() {
    const auto &cliffords = CliffordGroup::instance().elements();
    std::set<Mat3i> unique;
    const Mat3i seeds[3] = {kSeedA, kSeedA.transposed(), kSeedB};
    for (const CliffordElement &ci : cliffords) {
        for (const CliffordElement &cj : cliffords) {
            for (const Mat3i &f : seeds) {
                unique.insert(ci.matrix * (f * cj.matrix));
            }
        }
    }
    if (unique.size() != 120) {
        throw InternalConsistencyError("FacetSet: expected 120 distinct facets, got " +
                                       std::to_string(unique.size()));
    }
    // std::set iteration is already the lexicographic id order.
    int id = 0;
    for (const Mat3i &m : unique) {
        FacetKind kind = classify(m);
        facets_.push_back({id++, kind, m});
        counts_[static_cast<int>(kind)]++;
    }
    if (counts_[0] != 24 || counts_[1] != 24 || counts_[2] != 72) {
        throw InternalConsistencyError("FacetSet: kind partition is not 24/24/72");
    }
    flat_.reserve(120 * 9);
    for (const Facet &f : facets_) {
        for (int v : f.matrix.e) flat_.push_back(static_cast<double>(v));
    }
}

const FacetSet &FacetSet::instance() {
    static const FacetSet set;
    return set;
}

FacetSet::Max FacetSet::max_over_all(const Mat3 &m) const {
    Max best{-1e300, 0};
    const double *f = flat_.data();
    for (int id = 0; id < 120; id++, f += 9) {
        double v = 0;
        for (int k = 0; k < 9; k++) v += m.e[k] * f[k];
        if (v > best.value) best = {v, id};
    }
    return best;
}

FacetSet::Max FacetSet::max_over_a_like(const Mat3 &m) const {
    Max best{-1e300, -1};
    for (const Facet &f : facets_) {
        if (f.kind == FacetKind::B) continue;
        double v = frobenius(m, f.matrix);
        if (v > best.value) best = {v, f.id};
    }
    return best;
}

int FacetSet::id_of(const Mat3i &m) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), m,
                               [](const Facet &f, const Mat3i &want) { return f.matrix < want; });
    if (it != facets_.end() && it->matrix == m) return it->id;
    return -1;
}

const std::vector<Facet> &enumerate_facets() {
    return FacetSet::instance().facets();
}

std::vector<Mat3i> enumerate_b_facets_direct() {
    std::vector<Mat3i> out;
    out.reserve(72);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            for (int s : {1, -1}) {
                int rows[2], cols[2], n = 0;
                for (int r = 0; r < 3; r++)
                    if (r != i) rows[n++] = r;
                n = 0;
                for (int c = 0; c < 3; c++)
                    if (c != j) cols[n++] = c;
                for (int fill = 0; fill < 16; fill++) {
                    Mat3i m;
                    m(i, j) = s;
                    m(rows[0], cols[0]) = (fill >> 0) & 1 ? -1 : 1;
                    m(rows[0], cols[1]) = (fill >> 1) & 1 ? -1 : 1;
                    m(rows[1], cols[0]) = (fill >> 2) & 1 ? -1 : 1;
                    m(rows[1], cols[1]) = (fill >> 3) & 1 ? -1 : 1;
                    if (m.det() == -2) out.push_back(m);
                }
            }
        }
    }
    return out;
}

double facet_inner_product(const Mat3 &m, const Facet &f) {
    return frobenius(m, f.matrix);
}

MembershipVerdict polytope_membership(const Mat3 &m) {
    FacetSet::Max mx = FacetSet::instance().max_over_all(m);
    return {mx.value <= 1.0 + kEpsFacet, mx.value, mx.id};
}

}  // namespace cliffpoly
