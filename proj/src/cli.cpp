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

#include "cliffpoly/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "cliffpoly/clifford_group.hpp"
#include "cliffpoly/decompose.hpp"
#include "cliffpoly/errors.hpp"
#include "cliffpoly/json_writer.hpp"
#include "cliffpoly/postselect.hpp"
#include "cliffpoly/threshold.hpp"
#include "cliffpoly/tightness.hpp"

namespace cliffpoly::cli {

namespace {

std::vector<double> parse_doubles(const std::string &text, size_t want, const char *flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(std::string(flag) + ": malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.size() != want) {
        throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(want) +
                                    " comma-separated values, got " + std::to_string(out.size()));
    }
    return out;
}

Pauli parse_axis(char c) {
    switch (c) {
        case 'X': case 'x': return Pauli::X;
        case 'Y': case 'y': return Pauli::Y;
        case 'Z': case 'z': return Pauli::Z;
        default: throw std::invalid_argument("--meas: axes must be from {X, Y, Z}");
    }
}

int parse_outcome(const std::string &s) {
    if (s == "+1" || s == "1") return +1;
    if (s == "-1") return -1;
    throw std::invalid_argument("--outcome: expected +1 or -1");
}

// One gate input among --angles t,g,d | --unitary 8 re/im floats | --matrix 9 floats.
struct GateSpecOptions {
    std::string angles, unitary, matrix;

    void attach(CLI::App *cmd) {
        cmd->add_option("--angles", angles, "theta,gamma,delta in radians");
        cmd->add_option("--unitary", unitary, "2x2 unitary, row-major re,im pairs (8 floats)");
        cmd->add_option("--matrix", matrix, "3x3 real matrix, row-major (9 floats)");
    }

    int provided() const {
        return static_cast<int>(!angles.empty()) + static_cast<int>(!unitary.empty()) +
               static_cast<int>(!matrix.empty());
    }

    void require_one() const {
        if (provided() != 1) {
            throw std::invalid_argument("exactly one of --angles, --unitary, --matrix is required");
        }
    }

    GateAngles parse_angles() const {
        auto v = parse_doubles(angles, 3, "--angles");
        return {v[0], v[1], v[2]};
    }

    Unitary2 parse_unitary() const {
        auto v = parse_doubles(unitary, 8, "--unitary");
        return Unitary2({cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7])});
    }

    Mat3 parse_matrix() const {
        auto v = parse_doubles(matrix, 9, "--matrix");
        Mat3 m;
        for (int k = 0; k < 9; k++) m.e[k] = v[k];
        return m;
    }

    // Any 3x3 matrix: gate inputs map through the rotation representation.
    Mat3 as_matrix() const {
        require_one();
        if (!matrix.empty()) return parse_matrix();
        if (!angles.empty()) return rotation_from_angles(parse_angles()).mat();
        return rotation_from_unitary(parse_unitary()).mat();
    }

    // Strict rotation: a raw matrix must pass the SO(3) validation.
    Rotation3 as_rotation() const {
        require_one();
        if (!matrix.empty()) return Rotation3(parse_matrix());
        if (!angles.empty()) return rotation_from_angles(parse_angles());
        return rotation_from_unitary(parse_unitary());
    }
};

void write_matrix(JsonWriter &w, const Mat3 &m) {
    w.begin_array();
    for (double v : m.e) w.value(v);
    w.end_array();
}

void write_matrix(JsonWriter &w, const Mat3i &m) {
    w.begin_array();
    for (int v : m.e) w.value(v);
    w.end_array();
}

void cmd_cliffords(std::ostream &out) {
    JsonWriter w(out);
    w.begin_array();
    for (const CliffordElement &e : enumerate_cliffords()) {
        w.newline().begin_object();
        w.key("index").value(e.index);
        w.key("matrix");
        write_matrix(w, e.matrix);
        w.end_object();
    }
    w.newline().end_array();
    out << '\n';
}

void cmd_facets(std::ostream &out) {
    JsonWriter w(out);
    w.begin_array();
    for (const Facet &f : enumerate_facets()) {
        w.newline().begin_object();
        w.key("id").value(f.id);
        w.key("kind").value(facet_kind_name(f.kind));
        w.key("matrix");
        write_matrix(w, f.matrix);
        w.end_object();
    }
    w.newline().end_array();
    out << '\n';
}

void cmd_membership(const GateSpecOptions &gate, std::ostream &out) {
    Mat3 m = gate.as_matrix();
    MembershipVerdict v = polytope_membership(m);
    const Facet &witness = FacetSet::instance().facet(v.witness_id);
    JsonWriter w(out);
    w.begin_object();
    w.key("inside").value(v.inside);
    w.key("max_inner_product").value(v.max_value);
    w.key("witness_id").value(v.witness_id);
    w.key("witness_kind").value(facet_kind_name(witness.kind));
    w.end_object();
    out << '\n';
}

void cmd_decompose(const GateSpecOptions &gate, std::ostream &out) {
    Mat3 m = gate.as_matrix();
    auto weights = decompose(m);
    JsonWriter w(out);
    w.begin_object();
    w.key("feasible").value(weights.has_value());
    w.key("weights").begin_array();
    if (weights) {
        for (double v : weights->weights) w.value(v);
    }
    w.end_array();
    w.key("reconstruction_error");
    if (weights) {
        w.value(weights->reconstruction_error);
    } else {
        w.null();
    }
    w.end_object();
    out << '\n';
}

void cmd_threshold(const GateSpecOptions &gate, std::ostream &out) {
    ThresholdReport rep = threshold(gate.as_rotation());
    JsonWriter w(out);
    w.begin_object();
    w.key("rotation");
    write_matrix(w, rep.rotation);
    w.key("max_inner_product").value(rep.max_inner_product);
    w.key("p_star").value(rep.p_star);
    w.key("witness_id").value(rep.witness.id);
    w.key("witness_kind").value(facet_kind_name(rep.witness_kind));
    w.end_object();
    out << '\n';
}

void cmd_postselect(const GateSpecOptions &gate, const std::string &meas_str,
                    const std::string &outcome_str, std::ostream &out) {
    if (meas_str.size() != 2) {
        throw std::invalid_argument("--meas: expected two axes, e.g. YX");
    }
    TwoQubitPauli meas{parse_axis(meas_str[0]), parse_axis(meas_str[1])};
    int outcome = parse_outcome(outcome_str);
    gate.require_one();

    BlochVector bloch;
    double accept = 0;
    if (!gate.matrix.empty()) {
        Mat3 m = gate.parse_matrix();
        bloch = postselect_formula(m, meas, outcome);
        PauliCoefficients c = coefficients_from_matrix(m);
        accept = 0.5 * (1.0 + outcome * c(meas.first, meas.second));
    } else {
        Unitary2 u = gate.angles.empty() ? gate.parse_unitary() : unitary_from_angles(gate.parse_angles());
        PostselectionResult res = postselect_oracle(u, meas, outcome);
        bloch = res.bloch;
        accept = res.accept_probability;
    }
    JsonWriter w(out);
    w.begin_object();
    w.key("bloch").begin_array().value(bloch.x).value(bloch.y).value(bloch.z).end_array();
    w.key("accept_probability").value(accept);
    w.key("l1_norm").value(bloch.l1());
    w.key("outside_octahedron").value(!octahedron_inside(bloch));
    w.end_object();
    out << '\n';
}

GridSpec parse_grid(const std::string &text) {
    GridSpec g;
    char x1 = 0, x2 = 0;
    std::stringstream ss(text);
    if (!(ss >> g.n_theta >> x1 >> g.n_gamma >> x2 >> g.n_delta) || x1 != 'x' || x2 != 'x' ||
        !(ss >> std::ws).eof() || g.n_theta < 1 || g.n_gamma < 1 || g.n_delta < 1) {
        throw std::invalid_argument("--grid: expected NxNxN with sizes >= 1");
    }
    return g;
}

void cmd_survey(const GridSpec &grid, int workers, const std::string &format, std::ostream &out) {
    if (format == "csv") {
        out << "theta,gamma,delta,max_inner_product,p_star,witness_id,witness_kind\n";
        threshold_survey(grid, workers, [&](const SurveyRow &r) {
            out << format_double(r.angles.theta) << ',' << format_double(r.angles.gamma) << ','
                << format_double(r.angles.delta) << ',' << format_double(r.max_inner_product) << ','
                << format_double(r.p_star) << ',' << r.witness_id << ','
                << facet_kind_name(r.witness_kind) << '\n';
        });
        return;
    }
    JsonWriter w(out);
    w.begin_array();
    threshold_survey(grid, workers, [&](const SurveyRow &r) {
        w.newline().begin_object();
        w.key("theta").value(r.angles.theta);
        w.key("gamma").value(r.angles.gamma);
        w.key("delta").value(r.angles.delta);
        w.key("max_inner_product").value(r.max_inner_product);
        w.key("p_star").value(r.p_star);
        w.key("witness_id").value(r.witness_id);
        w.key("witness_kind").value(facet_kind_name(r.witness_kind));
        w.end_object();
    });
    w.newline().end_array();
    out << '\n';
}

int cmd_verify(long long samples, uint64_t seed, int workers, bool stress, std::ostream &out) {
    VerificationReport rep = run_verification({samples, seed, workers, stress});
    JsonWriter w(out);
    w.begin_object();
    w.key("samples").value(rep.samples);
    w.key("min_gap").value(rep.min_gap);
    w.key("min_margin").value(rep.min_margin);
    w.key("sign_pattern_histogram").begin_array();
    for (long long h : rep.sign_pattern_histogram) w.value(h);
    w.end_array();
    w.key("violations").begin_array();
    for (const Violation &v : rep.violations) {
        w.begin_object();
        w.key("sample").value(v.sample_index);
        w.key("type").value(v.type);
        w.key("value").value(v.value);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    out << '\n';
    return rep.violations.empty() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact depolarizing-noise thresholds for single-qubit gates "
                 "over the Clifford polytope"};
    app.name("cliffpoly");
    app.require_subcommand(1);

    CLI::App *c_cliffords = app.add_subcommand("cliffords", "Dump the 24 Clifford rotations as JSON");
    CLI::App *c_facets = app.add_subcommand("facets", "Dump the 120 polytope facets as JSON");

    GateSpecOptions g_membership, g_decompose, g_threshold, g_postselect;
    CLI::App *c_membership = app.add_subcommand("membership", "Facet test for polytope membership");
    g_membership.attach(c_membership);
    CLI::App *c_decompose =
        app.add_subcommand("decompose", "Convex decomposition over the 24 Clifford vertices");
    g_decompose.attach(c_decompose);
    CLI::App *c_threshold = app.add_subcommand("threshold", "Tight depolarizing threshold of a gate");
    g_threshold.attach(c_threshold);

    CLI::App *c_postselect =
        app.add_subcommand("postselect", "Bell-pair postselection reduced to a Bloch vector");
    g_postselect.attach(c_postselect);
    std::string meas = "YX", outcome = "+1";
    c_postselect->add_option("--meas", meas, "weight-two Pauli, e.g. YX");
    c_postselect->add_option("--outcome", outcome, "+1 or -1");

    CLI::App *c_survey = app.add_subcommand("survey", "Threshold survey over an angle grid");
    std::string grid_str = "8x8x8", survey_out, survey_format = "json";
    int survey_workers = 1;
    c_survey->add_option("--grid", grid_str, "grid sizes NxNxN over [0, 2pi)^3");
    c_survey->add_option("--out", survey_out, "output path (default: stdout)");
    c_survey->add_option("--format", survey_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    c_survey->add_option("--workers", survey_workers, "worker threads")->check(CLI::PositiveNumber);

    CLI::App *c_verify = app.add_subcommand("verify", "Machine-check the B-over-A dominance theorem");
    long long v_samples = 1000000;
    uint64_t v_seed = 0;
    int v_workers = 1;
    bool v_stress = false;
    std::string v_report;
    c_verify->add_option("--samples", v_samples, "Haar sample count")->check(CLI::PositiveNumber);
    c_verify->add_option("--seed", v_seed, "RNG seed");
    c_verify->add_option("--workers", v_workers, "worker threads")->check(CLI::PositiveNumber);
    c_verify->add_flag("--stress", v_stress, "include the deterministic tie-heavy stress set");
    c_verify->add_option("--report", v_report, "report path (default: stdout)");

    std::vector<const char *> argv;
    argv.push_back("cliffpoly");
    for (const std::string &a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        // Whole-document outputs are buffered so errors never leave partial
        // JSON behind; survey streams row by row after validation instead.
        std::ostringstream buf;
        if (c_cliffords->parsed()) {
            cmd_cliffords(buf);
        } else if (c_facets->parsed()) {
            cmd_facets(buf);
        } else if (c_membership->parsed()) {
            cmd_membership(g_membership, buf);
        } else if (c_decompose->parsed()) {
            cmd_decompose(g_decompose, buf);
        } else if (c_threshold->parsed()) {
            cmd_threshold(g_threshold, buf);
        } else if (c_postselect->parsed()) {
            cmd_postselect(g_postselect, meas, outcome, buf);
        } else if (c_survey->parsed()) {
            GridSpec grid = parse_grid(grid_str);
            if (survey_out.empty()) {
                cmd_survey(grid, survey_workers, survey_format, out);
            } else {
                std::ofstream file(survey_out, std::ios::binary);
                if (!file) throw std::invalid_argument("--out: cannot open '" + survey_out + "'");
                cmd_survey(grid, survey_workers, survey_format, file);
            }
            return 0;
        } else if (c_verify->parsed()) {
            int code;
            if (v_report.empty()) {
                code = cmd_verify(v_samples, v_seed, v_workers, v_stress, buf);
                out << buf.str();
            } else {
                std::ofstream file(v_report, std::ios::binary);
                if (!file) throw std::invalid_argument("--report: cannot open '" + v_report + "'");
                code = cmd_verify(v_samples, v_seed, v_workers, v_stress, file);
            }
            return code;
        }
        out << buf.str();
        return 0;
    } catch (const TheoremViolationError &e) {
        err << "theorem violation: " << e.what() << '\n';
        return 2;
    } catch (const InternalConsistencyError &e) {
        err << "internal consistency error: " << e.what() << '\n';
        return 2;
    } catch (const SolverFailureError &e) {
        err << "solver failure: " << e.what() << '\n';
        return 2;
    } catch (const ZeroProbabilityBranchError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cliffpoly::cli
