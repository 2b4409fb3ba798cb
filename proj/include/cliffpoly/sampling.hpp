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

#include <cmath>
#include <cstdint>
#include <numbers>

#include "cliffpoly/linalg.hpp"

namespace cliffpoly {

/// Counter-based pseudo-random stream (SplitMix64). Stream k of a seed is
/// derived from (seed, k) alone, so work partitioned over any number of
/// workers draws identical numbers per sample index.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(mix(seed + 0x9E3779B97F4A7C15ULL)) {}

    /// Independent sub-stream for a given sample index.
    static Rng stream(uint64_t seed, uint64_t index) {
        Rng r(seed);
        r.state_ = mix(r.state_ ^ mix(index + 0xBF58476D1CE4E5B9ULL));
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [0, 2*pi).
    double next_angle() { return next_double() * 2.0 * std::numbers::pi; }

    /// Standard normal via Box-Muller (two uniforms per call, no caching, so
    /// the draw count per sample is fixed).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

/// Haar-uniform SO(3) rotation: four independent standard normals normalized
/// to a unit quaternion, then converted to a rotation matrix.
inline Mat3 haar_rotation(Rng &rng) {
    double w = rng.next_gaussian();
    double x = rng.next_gaussian();
    double y = rng.next_gaussian();
    double z = rng.next_gaussian();
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n < 1e-300) {
        w = 1;
        n = 1;
    }
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    Mat3 r;
    r(0, 0) = 1 - 2 * (y * y + z * z);
    r(0, 1) = 2 * (x * y - w * z);
    r(0, 2) = 2 * (x * z + w * y);
    r(1, 0) = 2 * (x * y + w * z);
    r(1, 1) = 1 - 2 * (x * x + z * z);
    r(1, 2) = 2 * (y * z - w * x);
    r(2, 0) = 2 * (x * z - w * y);
    r(2, 1) = 2 * (y * z + w * x);
    r(2, 2) = 1 - 2 * (x * x + y * y);
    return r;
}

/// Rotation by `angle` about coordinate axis 0 (x), 1 (y) or 2 (z).
inline Mat3 axis_rotation(int axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    Mat3 r = Mat3::identity();
    switch (axis) {
        case 0:
            r(1, 1) = c; r(1, 2) = -s;
            r(2, 1) = s; r(2, 2) = c;
            break;
        case 1:
            r(0, 0) = c; r(0, 2) = s;
            r(2, 0) = -s; r(2, 2) = c;
            break;
        default:
            r(0, 0) = c; r(0, 1) = -s;
            r(1, 0) = s; r(1, 1) = c;
            break;
    }
    return r;
}

}  // namespace cliffpoly
