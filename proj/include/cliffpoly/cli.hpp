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

#include <ostream>
#include <string>
#include <vector>

namespace cliffpoly::cli {

/// Dispatches the subcommands {cliffords, facets, membership, decompose,
/// threshold, survey, postselect, verify}. JSON goes to `out`; diagnostics to
/// `err` only (never partial JSON). Exit codes: 0 success, 1 invalid input,
/// 2 theorem violation or internal consistency failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cliffpoly::cli
