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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/decompose.hpp"
#include "cliffpoly/errors.hpp"
#include "cliffpoly/postselect.hpp"
#include "cliffpoly/sampling.hpp"
#include "cliffpoly/threshold.hpp"
#include "cliffpoly/tightness.hpp"

namespace py = pybind11;
using namespace cliffpoly;

namespace {

using PyMat = std::array<std::array<double, 3>, 3>;
using PyUnitary = std::array<std::array<cplx, 2>, 2>;

Mat3 to_mat3(const PyMat &m) {
    Mat3 out;
    for (int r = 0; r < 3; r++)
        for (int c = 0; c < 3; c++) out(r, c) = m[r][c];
    return out;
}

PyMat from_mat3(const Mat3 &m) {
    PyMat out;
    for (int r = 0; r < 3; r++)
        for (int c = 0; c < 3; c++) out[r][c] = m(r, c);
    return out;
}

PyMat from_mat3i(const Mat3i &m) {
    PyMat out;
    for (int r = 0; r < 3; r++)
        for (int c = 0; c < 3; c++) out[r][c] = m(r, c);
    return out;
}

Unitary2 to_unitary(const PyUnitary &u) {
    return Unitary2({u[0][0], u[0][1], u[1][0], u[1][1]});
}

Pauli axis_from_char(char c) {
    switch (c) {
        case 'X': case 'x': return Pauli::X;
        case 'Y': case 'y': return Pauli::Y;
        case 'Z': case 'z': return Pauli::Z;
        default: throw std::invalid_argument("measurement axes must be from {X, Y, Z}");
    }
}

TwoQubitPauli parse_meas(const std::string &meas) {
    if (meas.size() != 2) throw std::invalid_argument("measurement must name two axes, e.g. 'YX'");
    return {axis_from_char(meas[0]), axis_from_char(meas[1])};
}

py::dict threshold_dict(const ThresholdReport &rep) {
    py::dict d;
    d["rotation"] = from_mat3(rep.rotation);
    d["max_inner_product"] = rep.max_inner_product;
    d["p_star"] = rep.p_star;
    d["witness_id"] = rep.witness.id;
    d["witness_kind"] = std::string(facet_kind_name(rep.witness_kind));
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact depolarizing-noise thresholds for single-qubit gates over the Clifford polytope";

    py::register_exception<TheoremViolationError>(m, "TheoremViolation");
    py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError");
    py::register_exception<SolverFailureError>(m, "SolverFailure");
    py::register_exception<ZeroProbabilityBranchError>(m, "ZeroProbabilityBranch");

    m.def(
        "unitary_from_angles",
        [](double theta, double gamma, double delta) {
            Unitary2 u = unitary_from_angles({theta, gamma, delta});
            return PyUnitary{{{u(0, 0), u(0, 1)}, {u(1, 0), u(1, 1)}}};
        },
        py::arg("theta"), py::arg("gamma"), py::arg("delta"),
        "2x2 special-unitary matrix for the angle parameterization");

    m.def(
        "pauli_coefficients",
        [](const PyUnitary &u) {
            PauliCoefficients c = pauli_coefficients(to_unitary(u));
            std::array<std::array<double, 4>, 4> out;
            for (int i = 0; i < 4; i++)
                for (int j = 0; j < 4; j++) out[i][j] = c.c[4 * i + j];
            return out;
        },
        py::arg("unitary"),
        "16 Pauli coefficients of (I x U) applied to a Bell pair, indexed I,X,Y,Z");

    m.def(
        "rotation_from_unitary",
        [](const PyUnitary &u) { return from_mat3(rotation_from_unitary(to_unitary(u)).mat()); },
        py::arg("unitary"), "SO(3) Bloch-ball representation of a single-qubit unitary");

    m.def(
        "rotation_from_angles",
        [](double theta, double gamma, double delta) {
            return from_mat3(rotation_from_angles({theta, gamma, delta}).mat());
        },
        py::arg("theta"), py::arg("gamma"), py::arg("delta"));

    m.def(
        "depolarize",
        [](const PyMat &r, double p) { return from_mat3(depolarize(Rotation3(to_mat3(r)), p)); },
        py::arg("rotation"), py::arg("p"), "Unital part (1-p) R of a depolarized gate");

    m.def("cliffords", [] {
        py::list out;
        for (const CliffordElement &e : enumerate_cliffords()) {
            py::dict d;
            d["index"] = e.index;
            d["matrix"] = from_mat3i(e.matrix);
            out.append(d);
        }
        return out;
    });

    m.def("facets", [] {
        py::list out;
        for (const Facet &f : enumerate_facets()) {
            py::dict d;
            d["id"] = f.id;
            d["kind"] = std::string(facet_kind_name(f.kind));
            d["matrix"] = from_mat3i(f.matrix);
            out.append(d);
        }
        return out;
    });

    m.def(
        "membership",
        [](const PyMat &m) {
            MembershipVerdict v = polytope_membership(to_mat3(m));
            py::dict d;
            d["inside"] = v.inside;
            d["max_inner_product"] = v.max_value;
            d["witness_id"] = v.witness_id;
            d["witness_kind"] =
                std::string(facet_kind_name(FacetSet::instance().facet(v.witness_id).kind));
            return d;
        },
        py::arg("matrix"), "Facet test: inside iff max_F M.F <= 1");

    m.def(
        "decompose",
        [](const PyMat &m) {
            auto w = decompose(to_mat3(m));
            py::dict d;
            d["feasible"] = w.has_value();
            if (w) {
                d["weights"] = std::vector<double>(w->weights.begin(), w->weights.end());
                d["reconstruction_error"] = w->reconstruction_error;
            } else {
                d["weights"] = py::list();
                d["reconstruction_error"] = py::none();
            }
            return d;
        },
        py::arg("matrix"), "Convex weights over the 24 Clifford vertices, or infeasible");

    m.def(
        "threshold", [](const PyMat &r) { return threshold_dict(threshold(Rotation3(to_mat3(r)))); },
        py::arg("rotation"), "Tight depolarizing threshold p* and its witnessing facet");

    m.def(
        "threshold_from_angles",
        [](double theta, double gamma, double delta) {
            return threshold_dict(threshold_from_angles({theta, gamma, delta}));
        },
        py::arg("theta"), py::arg("gamma"), py::arg("delta"));

    m.def(
        "postselect",
        [](const PyUnitary &u, const std::string &meas, int outcome) {
            PostselectionResult res = postselect_oracle(to_unitary(u), parse_meas(meas), outcome);
            py::dict d;
            d["bloch"] = std::array<double, 3>{res.bloch.x, res.bloch.y, res.bloch.z};
            d["accept_probability"] = res.accept_probability;
            d["l1_norm"] = res.bloch.l1();
            d["outside_octahedron"] = !octahedron_inside(res.bloch);
            return d;
        },
        py::arg("unitary"), py::arg("meas") = "YX", py::arg("outcome") = 1,
        "Density-matrix postselection oracle");

    m.def(
        "postselect_formula",
        [](const PyMat &m, const std::string &meas, int outcome) {
            BlochVector r = postselect_formula(to_mat3(m), parse_meas(meas), outcome);
            return std::array<double, 3>{r.x, r.y, r.z};
        },
        py::arg("matrix"), py::arg("meas") = "YX", py::arg("outcome") = 1,
        "Closed-form postselection reduction from the rotation layout");

    m.def(
        "octahedron_inside",
        [](const std::array<double, 3> &r) { return octahedron_inside({r[0], r[1], r[2]}); },
        py::arg("bloch"));

    m.def(
        "facet_equivalence",
        [](const PyMat &m, int facet_id) {
            const Facet &f = FacetSet::instance().facet(facet_id);
            EquivalenceRecord rec = facet_violation_equivalence(to_mat3(m), f);
            py::dict d;
            d["meas"] = std::string(1, "IXYZ"[static_cast<int>(rec.measurement.meas.first)]) +
                        std::string(1, "IXYZ"[static_cast<int>(rec.measurement.meas.second)]);
            d["outcome"] = rec.measurement.outcome;
            d["correction"] = std::string(1, "IXYZ"[static_cast<int>(rec.measurement.correction)]);
            d["facet_value"] = rec.facet_value;
            d["edge_value"] = rec.edge_value;
            d["l1_corrected"] = rec.l1_corrected;
            d["facet_violated"] = rec.facet_violated;
            d["edge_violated"] = rec.edge_violated;
            return d;
        },
        py::arg("matrix"), py::arg("facet_id"),
        "Both sides of the facet-vs-octahedron equivalence for a B facet");

    m.def(
        "canonicalize",
        [](const PyMat &r) {
            CanonicalizationRecord rec = canonicalize(Rotation3(to_mat3(r)));
            py::dict d;
            d["left"] = rec.left;
            d["right"] = rec.right;
            d["transposed"] = rec.transposed;
            d["canonical_rotation"] = from_mat3(rec.canonical_rotation);
            return d;
        },
        py::arg("rotation"));

    m.def(
        "global_dominance",
        [](const PyMat &r) {
            DominanceRecord rec = verify_global_dominance(to_mat3(r));
            py::dict d;
            d["max_a"] = rec.max_a;
            d["max_b"] = rec.max_b;
            d["gap"] = rec.gap;
            return d;
        },
        py::arg("rotation"), "maxB - maxA over the facet system; the theorem predicts gap >= 0");

    m.def(
        "verify",
        [](long long samples, uint64_t seed, int workers, bool stress) {
            VerificationReport rep = run_verification({samples, seed, workers, stress});
            py::dict d;
            d["samples"] = rep.samples;
            d["min_gap"] = rep.min_gap;
            d["min_margin"] = rep.min_margin;
            d["sign_pattern_histogram"] = std::vector<long long>(rep.sign_pattern_histogram.begin(),
                                                                 rep.sign_pattern_histogram.end());
            py::list violations;
            for (const Violation &v : rep.violations) {
                py::dict vd;
                vd["sample"] = v.sample_index;
                vd["type"] = v.type;
                vd["value"] = v.value;
                violations.append(vd);
            }
            d["violations"] = violations;
            return d;
        },
        py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("workers") = 1,
        py::arg("stress") = false, "Monte Carlo + stress verification of the dominance theorem");

    m.def(
        "survey",
        [](int n_theta, int n_gamma, int n_delta) {
            py::list out;
            for (const SurveyRow &r : threshold_survey({n_theta, n_gamma, n_delta})) {
                py::dict d;
                d["theta"] = r.angles.theta;
                d["gamma"] = r.angles.gamma;
                d["delta"] = r.angles.delta;
                d["max_inner_product"] = r.max_inner_product;
                d["p_star"] = r.p_star;
                d["witness_id"] = r.witness_id;
                d["witness_kind"] = std::string(facet_kind_name(r.witness_kind));
                out.append(d);
            }
            return out;
        },
        py::arg("n_theta"), py::arg("n_gamma"), py::arg("n_delta"));

    m.def(
        "haar_rotation",
        [](uint64_t seed, uint64_t index) {
            Rng rng = Rng::stream(seed, index);
            return from_mat3(haar_rotation(rng));
        },
        py::arg("seed"), py::arg("index") = 0, "Seeded Haar-uniform SO(3) sample");
}
