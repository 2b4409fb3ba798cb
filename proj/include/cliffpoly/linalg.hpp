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

#include <algorithm>
#include <array>
#include <cmath>

namespace cliffpoly {

/// Dense 3x3 real matrix with value semantics. Row-major storage.
struct Mat3 {
    std::array<double, 9> e{};

    double &operator()(int r, int c) { return e[3 * r + c]; }
    double operator()(int r, int c) const { return e[3 * r + c]; }

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Mat3 transposed() const {
        Mat3 t;
        for (int r = 0; r < 3; r++)
            for (int c = 0; c < 3; c++)
                t(r, c) = (*this)(c, r);
        return t;
    }

    double det() const {
        const Mat3 &m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    friend Mat3 operator*(const Mat3 &a, const Mat3 &b) {
        Mat3 p;
        for (int r = 0; r < 3; r++)
            for (int c = 0; c < 3; c++)
                p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        return p;
    }
    friend Mat3 operator*(double s, const Mat3 &a) {
        Mat3 p;
        for (int k = 0; k < 9; k++) p.e[k] = s * a.e[k];
        return p;
    }
    friend Mat3 operator+(const Mat3 &a, const Mat3 &b) {
        Mat3 p;
        for (int k = 0; k < 9; k++) p.e[k] = a.e[k] + b.e[k];
        return p;
    }
    friend Mat3 operator-(const Mat3 &a, const Mat3 &b) {
        Mat3 p;
        for (int k = 0; k < 9; k++) p.e[k] = a.e[k] - b.e[k];
        return p;
    }
    friend bool operator==(const Mat3 &a, const Mat3 &b) { return a.e == b.e; }
};

/// Frobenius (elementwise) inner product of two 3x3 matrices.
inline double frobenius(const Mat3 &a, const Mat3 &b) {
    double s = 0;
    for (int k = 0; k < 9; k++) s += a.e[k] * b.e[k];
    return s;
}

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Mat3 &a, const Mat3 &b) {
    double m = 0;
    for (int k = 0; k < 9; k++) m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

inline double max_abs_entry(const Mat3 &a) {
    double m = 0;
    for (int k = 0; k < 9; k++) m = std::max(m, std::abs(a.e[k]));
    return m;
}

/// 3x3 integer matrix; used for Clifford vertices and polytope facets so the
/// group and facet arithmetic stays exact.
struct Mat3i {
    std::array<int, 9> e{};

    int &operator()(int r, int c) { return e[3 * r + c]; }
    int operator()(int r, int c) const { return e[3 * r + c]; }

    static Mat3i identity() { return Mat3i{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Mat3i transposed() const {
        Mat3i t;
        for (int r = 0; r < 3; r++)
            for (int c = 0; c < 3; c++)
                t(r, c) = (*this)(c, r);
        return t;
    }

    int det() const {
        const Mat3i &m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 as_mat3() const {
        Mat3 m;
        for (int k = 0; k < 9; k++) m.e[k] = static_cast<double>(e[k]);
        return m;
    }

    friend Mat3i operator*(const Mat3i &a, const Mat3i &b) {
        Mat3i p;
        for (int r = 0; r < 3; r++)
            for (int c = 0; c < 3; c++)
                p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        return p;
    }
    friend bool operator==(const Mat3i &a, const Mat3i &b) { return a.e == b.e; }
    friend auto operator<=>(const Mat3i &a, const Mat3i &b) { return a.e <=> b.e; }
};

inline int frobenius(const Mat3i &a, const Mat3i &b) {
    int s = 0;
    for (int k = 0; k < 9; k++) s += a.e[k] * b.e[k];
    return s;
}

inline double frobenius(const Mat3 &a, const Mat3i &b) {
    double s = 0;
    for (int k = 0; k < 9; k++) s += a.e[k] * b.e[k];
    return s;
}

}  // namespace cliffpoly
