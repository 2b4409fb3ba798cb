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

#include "cliffpoly/clifford_group.hpp"

#include <algorithm>
#include <cmath>

#include "cliffpoly/errors.hpp"

namespace cliffpoly {

CliffordGroup::CliffordGroup() {
    // All 6 permutations x 8 sign patterns, keeping determinant +1.
    std::vector<Mat3i> mats;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto &perm : perms) {
        for (int signs = 0; signs < 8; signs++) {
            Mat3i m;
            for (int r = 0; r < 3; r++) m(r, perm[r]) = (signs >> r) & 1 ? -1 : 1;
            if (m.det() == 1) mats.push_back(m);
        }
    }
    std::sort(mats.begin(), mats.end());
    // Canonical ordering starts at the identity.
    auto it = std::find(mats.begin(), mats.end(), Mat3i::identity());
    std::iter_swap(mats.begin(), it);

    elements_.reserve(24);
    row_forms_.reserve(24);
    for (int i = 0; i < static_cast<int>(mats.size()); i++) {
        elements_.push_back({i, mats[i]});
        SignedPerm sp{};
        for (int r = 0; r < 3; r++) {
            for (int c = 0; c < 3; c++) {
                if (mats[i](r, c) != 0) {
                    sp.col[r] = c;
                    sp.sign[r] = mats[i](r, c);
                }
            }
        }
        row_forms_.push_back(sp);
    }

    cayley_.assign(24 * 24, -1);
    for (int a = 0; a < 24; a++) {
        for (int b = 0; b < 24; b++) {
            auto idx = index_of(elements_[a].matrix * elements_[b].matrix);
            if (!idx) throw InternalConsistencyError("CliffordGroup: product escaped the group");
            cayley_[24 * a + b] = *idx;
        }
        auto inv = index_of(elements_[a].matrix.transposed());
        if (!inv) throw InternalConsistencyError("CliffordGroup: transpose escaped the group");
        inverse_[a] = *inv;
    }
}

const CliffordGroup &CliffordGroup::instance() {
    static const CliffordGroup group;
    return group;
}

std::optional<int> CliffordGroup::index_of(const Mat3i &m) const {
    for (const CliffordElement &e : elements_) {
        if (e.matrix == m) return e.index;
    }
    return std::nullopt;
}

std::optional<int> CliffordGroup::index_of(const Mat3 &m) const {
    Mat3i rounded;
    for (int k = 0; k < 9; k++) {
        double r = std::round(m.e[k]);
        if (std::abs(m.e[k] - r) >= 1e-9 || std::abs(r) > 1.0) return std::nullopt;
        rounded.e[k] = static_cast<int>(r);
    }
    return index_of(rounded);
}

const std::vector<CliffordElement> &enumerate_cliffords() {
    return CliffordGroup::instance().elements();
}

CliffordElement clifford_multiply(const CliffordElement &a, const CliffordElement &b) {
    const CliffordGroup &g = CliffordGroup::instance();
    return g.element(g.product_index(a.index, b.index));
}

std::optional<CliffordElement> clifford_lookup(const Mat3 &m) {
    const CliffordGroup &g = CliffordGroup::instance();
    auto idx = g.index_of(m);
    if (!idx) return std::nullopt;
    return g.element(*idx);
}

}  // namespace cliffpoly
