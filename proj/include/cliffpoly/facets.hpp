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

#include <string_view>
#include <vector>

#include "cliffpoly/linalg.hpp"

namespace cliffpoly {

/// Slack allowed when testing M . F <= 1 on floating-point inputs. Integer
/// inputs need no slack: their inner products are small exact integers in
/// double arithmetic, so the comparison is exact either way.
inline constexpr double kEpsFacet = 1e-9;

/// A facets have a single column of +-1 entries (AT a single row); B facets
/// have one isolated +-1 entry at (i, j), +-1 entries at the four positions
/// outside row i and column j, and determinant exactly -2.
enum class FacetKind { A, AT, B };

std::string_view facet_kind_name(FacetKind k);

/// A supporting hyperplane of the Clifford polytope: the inequality
/// M . F <= 1. Ids are stable, assigned by lexicographic order of the
/// flattened integer matrices.
struct Facet {
    int id = 0;
    FacetKind kind = FacetKind::A;
    Mat3i matrix;
};

/// The full facet system, deduplicated from the 24*24*3 conjugation products
/// of the canonical seeds. Built once; all queries are read-only.
class FacetSet {
  public:
    static const FacetSet &instance();

    const std::vector<Facet> &facets() const { return facets_; }
    const Facet &facet(int id) const { return facets_[id]; }

    int count(FacetKind k) const { return counts_[static_cast<int>(k)]; }

    struct Max {
        double value = 0;
        int id = 0;
    };

    /// Largest inner product over all 120 facets; lowest id wins exact ties.
    Max max_over_all(const Mat3 &m) const;

    /// Largest inner product over the union of A and AT facets.
    Max max_over_a_like(const Mat3 &m) const;

    /// Exact-match lookup of an integer facet matrix.
    int id_of(const Mat3i &m) const;  // -1 when absent

  private:
    FacetSet();

    std::vector<Facet> facets_;
    std::array<int, 3> counts_{};
    // Flattened doubles, id order, for the hot scan loops.
    std::vector<double> flat_;
};

/// All 120 facets in id order.
const std::vector<Facet> &enumerate_facets();

/// Direct construction of the 72 B facets: 18 choices of isolated entry
/// position and sign, times the 4 sign fills of the complementary 2x2 block
/// that reach det = -2. Returned unsorted, as constructed.
std::vector<Mat3i> enumerate_b_facets_direct();

double facet_inner_product(const Mat3 &m, const Facet &f);

/// Membership verdict for the facet test. `witness` is the facet attaining
/// the maximum (lowest id on ties) and is meaningful even for inside points.
struct MembershipVerdict {
    bool inside = true;
    double max_value = 0;
    int witness_id = 0;
};

/// Inside iff max over all facets of m . F <= 1 + kEpsFacet.
MembershipVerdict polytope_membership(const Mat3 &m);

}  // namespace cliffpoly
