# Copyright 2026 The cliffpoly developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact depolarizing-noise thresholds for single-qubit gates over the
Clifford polytope."""

from ._core import (
    InternalConsistencyError,
    SolverFailure,
    TheoremViolation,
    ZeroProbabilityBranch,
    canonicalize,
    cliffords,
    decompose,
    depolarize,
    facet_equivalence,
    facets,
    global_dominance,
    haar_rotation,
    membership,
    octahedron_inside,
    pauli_coefficients,
    postselect,
    postselect_formula,
    rotation_from_angles,
    rotation_from_unitary,
    survey,
    threshold,
    threshold_from_angles,
    unitary_from_angles,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "InternalConsistencyError",
    "SolverFailure",
    "TheoremViolation",
    "ZeroProbabilityBranch",
    "canonicalize",
    "cliffords",
    "decompose",
    "depolarize",
    "facet_equivalence",
    "facets",
    "global_dominance",
    "haar_rotation",
    "membership",
    "octahedron_inside",
    "pauli_coefficients",
    "postselect",
    "postselect_formula",
    "rotation_from_angles",
    "rotation_from_unitary",
    "survey",
    "threshold",
    "threshold_from_angles",
    "unitary_from_angles",
    "verify",
]
