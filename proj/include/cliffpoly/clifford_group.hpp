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

#include <optional>
#include <vector>

#include "cliffpoly/linalg.hpp"

namespace cliffpoly {

/// One of the 24 single-qubit Clifford operations in its SO(3) form: a signed
/// permutation matrix with determinant +1. Indices are stable: the 24
/// matrices are ordered lexicographically by flattened row-major entries,
/// then the identity is swapped to index 0.
struct CliffordElement {
    int index = 0;
    Mat3i matrix;
};

/// The group of 24 elements with its Cayley table, built once and immutable.
class CliffordGroup {
  public:
    static const CliffordGroup &instance();

    const std::vector<CliffordElement> &elements() const { return elements_; }
    const CliffordElement &element(int index) const { return elements_[index]; }

    /// Index of element(a) * element(b) in the canonical ordering.
    int product_index(int a, int b) const { return cayley_[24 * a + b]; }

    /// Index of the inverse (= transpose) of element(a).
    int inverse_index(int a) const { return inverse_[a]; }

    /// Exact-match lookup of an integer signed permutation matrix.
    std::optional<int> index_of(const Mat3i &m) const;

    /// Rounds entries to nearest integers and looks the result up; fails when
    /// any entry is further than 1e-9 from an integer or the rounded matrix
    /// is not one of the 24.
    std::optional<int> index_of(const Mat3 &m) const;

    /// Row-wise signed-permutation form: matrix(r, col[r]) == sign[r].
    struct SignedPerm {
        std::array<int, 3> col;
        std::array<int, 3> sign;
    };
    const SignedPerm &row_form(int index) const { return row_forms_[index]; }

  private:
    CliffordGroup();

    std::vector<CliffordElement> elements_;
    std::vector<int> cayley_;
    std::array<int, 24> inverse_{};
    std::vector<SignedPerm> row_forms_;
};

/// The 24 Clifford elements in canonical order.
const std::vector<CliffordElement> &enumerate_cliffords();

/// Group product; total on the canonical enumeration.
CliffordElement clifford_multiply(const CliffordElement &a, const CliffordElement &b);

/// Matches m against the 24 elements (entries rounded to nearest integer,
/// residual < 1e-9); nullopt when m is not a Clifford rotation.
std::optional<CliffordElement> clifford_lookup(const Mat3 &m);

}  // namespace cliffpoly
