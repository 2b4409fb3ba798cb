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

#include <stdexcept>
#include <string>

namespace cliffpoly {

/// A computed object failed a structural check that valid inputs can never
/// trigger. Signals a bug in this library, not bad caller input.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string &msg) : std::logic_error(msg) {}
};

/// A machine check of the dominance theorem (or one of its proof steps)
/// failed. Must never fire for genuine SO(3) inputs.
struct TheoremViolationError : std::logic_error {
    explicit TheoremViolationError(const std::string &msg) : std::logic_error(msg) {}
};

/// The LP solver exceeded its pivot cap. Distinct from "infeasible".
struct SolverFailureError : std::runtime_error {
    explicit SolverFailureError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A postselection branch has (numerically) zero acceptance probability; the
/// requested outcome cannot herald.
struct ZeroProbabilityBranchError : std::runtime_error {
    explicit ZeroProbabilityBranchError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace cliffpoly
