// Copyright 2026 The topophase Authors
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

#include "topophase/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topophase/error.hpp"
#include "topophase/interferometer.hpp"
#include "topophase/mes_phase.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"
#include "topophase/so3_topology.hpp"
#include "topophase/trajectories.hpp"

namespace topophase::cli {
namespace {

using nlohmann::ordered_json;

// 15 significant digits; the JSON writer then prints the shortest form.
double round15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string class_symbol(int sign) { return sign > 0 ? "+" : "-"; }

std::optional<nmr::TrajectoryClass> parse_class(const std::string& s) {
    if (s == "+" || s == "plus") {
        return nmr::TrajectoryClass::Plus;
    }
    if (s == "-" || s == "minus" || s == "\xE2\x88\x92") {
        return nmr::TrajectoryClass::Minus;
    }
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    }
}

struct Options {
    std::string class_name;
    std::string trajectory_path;
    double step = kTol.default_step;
    double phi = 0.0;
    int phi_steps = 24;
    std::string level = "circuit";
    std::string config_path;
    std::string out_path;
    std::string manifest_path;
    std::uint64_t seed = 42;
    int trials = 1000;
    int waypoints = 3;
};

Trajectory select_trajectory(const Options& o) {
    if (!o.trajectory_path.empty()) {
        return load_trajectory(read_file(o.trajectory_path));
    }
    const auto c = parse_class(o.class_name);
    if (!c) {
        throw CLI::ValidationError("--class", "expected + or -");
    }
    return nmr::catalog_trajectory(*c);
}

nmr::NmrConfig select_config(const Options& o) {
    return o.config_path.empty() ? nmr::NmrConfig{} : nmr::load_config(read_file(o.config_path));
}

void write_manifest(const Options& o, const std::string& command, const ordered_json& parameters,
                    const std::vector<std::string>& outputs) {
    if (o.manifest_path.empty()) {
        return;
    }
    ordered_json m;
    m["command"] = command;
    m["parameters"] = parameters;
    m["outputs"] = outputs;
    m["seed"] = o.seed;
    write_file(o.manifest_path, m.dump(2) + "\n");
}

// Sign of the SU(2) product of the segment gates (+-I).
int gate_product_sign(const Trajectory& traj) {
    CMatrix prod = CMatrix::identity(2);
    for (const auto& seg : traj.segments()) {
        prod = segment_unitary(seg).matrix() * prod;
    }
    if (max_abs_diff(prod, CMatrix::identity(2)) <= kTol.geometric) {
        return +1;
    }
    if (max_abs_diff(prod, -1.0 * CMatrix::identity(2)) <= kTol.geometric) {
        return -1;
    }
    throw Error(ErrorCode::OpenTrajectory, "segment gates do not compose to +-identity");
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Trajectory traj = select_trajectory(o);
    const SampledPath path = sample(traj, o.step);
    const int lift = lift_sign(path);
    const int crossings = count_surface_crossings(path);
    const int gates = gate_product_sign(traj);
    const int mes = trajectory_phase(traj);
    const int parity = crossings % 2 == 0 ? 1 : -1;
    const bool agree = lift == parity && lift == gates && lift == mes;

    ordered_json r;
    r["name"] = traj.name();
    r["class"] = class_symbol(lift);
    r["crossings"] = crossings;
    r["lift_sign"] = lift;
    r["gate_product_sign"] = gates;
    r["mes_phase"] = mes;
    r["agreement"] = agree;
    out << r.dump(2) << "\n";
    write_manifest(o, "classify", {{"class", o.class_name}, {"trajectory", o.trajectory_path}, {"step", o.step}}, {});
    return agree ? kOk : kFailure;
}

int cmd_phase(const Options& o, std::ostream& out) {
    const Trajectory traj = select_trajectory(o);
    const cplx ov = trajectory_overlap(traj);
    const int phase = trajectory_phase(traj);
    ordered_json r;
    r["name"] = traj.name();
    r["phase"] = phase;
    r["class"] = class_symbol(phase);
    r["overlap"] = {round15(ov.real()), round15(ov.imag())};
    out << r.dump(2) << "\n";
    write_manifest(o, "phase", {{"class", o.class_name}, {"trajectory", o.trajectory_path}}, {});
    return kOk;
}

int cmd_interferogram(const Options& o, std::ostream& out) {
    const Trajectory traj = select_trajectory(o);
    const std::vector<double> phis = phase_grid(o.phi_steps);
    std::vector<InterferogramPoint> points;
    if (o.level == "circuit") {
        points = interferogram(traj, phis);
    } else {
        const auto sys = nmr::default_system();
        const auto config = select_config(o);
        const auto calib = nmr::calibrate(sys, config);
        for (double phi : phis) {
            points.push_back({phi, nmr::run_nmr_trajectory(traj, phi, sys, config, calib).normalized_integral});
        }
    }
    const int gamma_sign = trajectory_phase(traj);
    double residual = 0.0;
    for (const auto& p : points) {
        residual = std::max(residual, std::abs(p.value - gamma_sign * std::cos(p.phi)));
    }
    const std::string csv = interferogram_csv(points);
    std::vector<std::string> outputs;
    if (o.out_path.empty()) {
        out << csv;
    } else {
        write_file(o.out_path, csv);
        outputs.push_back(o.out_path);
        ordered_json r;
        r["class"] = class_symbol(gamma_sign);
        r["level"] = o.level;
        r["points"] = points.size();
        r["max_residual"] = round15(residual);
        r["output"] = o.out_path;
        out << r.dump(2) << "\n";
    }
    write_manifest(o, "interferogram",
                   {{"class", o.class_name},
                    {"trajectory", o.trajectory_path},
                    {"phi_steps", o.phi_steps},
                    {"level", o.level},
                    {"config", o.config_path}},
                   outputs);
    return kOk;
}

int cmd_nmr(const Options& o, std::ostream& out) {
    const Trajectory traj = select_trajectory(o);
    const auto sys = nmr::default_system();
    const auto config = select_config(o);
    const auto result = nmr::run_nmr_trajectory(traj, o.phi, sys, config);
    std::vector<std::string> outputs;
    if (!o.out_path.empty()) {
        write_file(o.out_path, nmr::spectrum_csv(result.spectrum));
        outputs.push_back(o.out_path);
    }
    const auto lines = nmr::find_lines(result.spectrum, -config.band_hz, config.band_hz);
    ordered_json r;
    r["integral_normalized"] = round15(result.normalized_integral);
    r["class_readout"] = result.normalized_integral >= 0.0 ? "+" : "-";
    r["integral"] = round15(result.integral);
    r["phase_correction_rad"] = round15(result.calibration.phase_correction);
    ordered_json jl = ordered_json::array();
    for (const auto& l : lines) {
        jl.push_back({{"freq_hz", round15(l.frequency)}, {"height", round15(l.height)}});
    }
    r["lines"] = jl;
    if (lines.size() == 2) {
        r["splitting_hz"] = round15(std::abs(lines[1].frequency - lines[0].frequency));
    }
    out << r.dump(2) << "\n";
    write_manifest(o, "nmr",
                   {{"class", o.class_name}, {"trajectory", o.trajectory_path}, {"phi", o.phi}, {"config", o.config_path}},
                   outputs);
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    int agreement = 0;
    int disagreement = 0;
    int resampled = 0;
    int plus = 0;
    std::uint64_t draw = 0;
    for (int trial = 0; trial < o.trials; ++trial) {
        for (;;) {
            const std::uint64_t seed = o.seed * 0x9E3779B97F4A7C15ULL + draw++;
            const auto segs = random_closed_segments(seed, o.waypoints);
            const SampledPath path = sample_segments(segs, o.step);
            int crossings = 0;
            try {
                crossings = count_surface_crossings(path);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::TangentialTouch) {
                    throw;
                }
                ++resampled;
                continue;
            }
            const int lift = lift_sign(path);
            const int parity = crossings % 2 == 0 ? 1 : -1;
            const int mes = trajectory_phase(Trajectory("random", segs));
            if (lift == parity && lift == mes) {
                ++agreement;
            } else {
                ++disagreement;
            }
            plus += lift > 0 ? 1 : 0;
            break;
        }
    }
    ordered_json r;
    r["trials"] = o.trials;
    r["seed"] = o.seed;
    r["agreement"] = agreement;
    r["disagreement"] = disagreement;
    r["resampled"] = resampled;
    r["plus_class"] = plus;
    r["minus_class"] = o.trials - plus;
    out << r.dump(2) << "\n";
    write_manifest(o, "oracle", {{"trials", o.trials}, {"step", o.step}, {"waypoints", o.waypoints}}, {});
    return disagreement == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological phase of entangled qubit pairs under closed SO(3) circuits", "topophase"};
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* sub) {
        auto* cls = sub->add_option("--class", o.class_name, "Catalog trajectory: + or -");
        auto* file = sub->add_option("--trajectory", o.trajectory_path, "Trajectory JSON file");
        cls->excludes(file);
    };
    auto add_manifest = [&](CLI::App* sub) {
        sub->add_option("--manifest", o.manifest_path, "Write a run manifest JSON here");
    };

    auto* classify = app.add_subcommand("classify", "Homotopy class of a closed trajectory, three ways");
    add_source(classify);
    classify->add_option("--step", o.step, "Sampling step (rad)")->check(CLI::Range(1e-6, kTol.max_step));
    add_manifest(classify);

    auto* phase = app.add_subcommand("phase", "Sign acquired by the entangled pair");
    add_source(phase);
    add_manifest(phase);

    auto* interf = app.add_subcommand("interferogram", "Ancilla <sigma_x> versus phase shift");
    add_source(interf);
    interf->add_option("--phi-steps", o.phi_steps, "Samples over [0, 2pi)")->check(CLI::Range(2, 1 << 20));
    interf->add_option("--level", o.level, "circuit or pulse")->check(CLI::IsMember({"circuit", "pulse"}));
    interf->add_option("--config", o.config_path, "Acquisition config JSON (pulse level)");
    interf->add_option("--out", o.out_path, "CSV output path (stdout if omitted)");
    add_manifest(interf);

    auto* nmr_cmd = app.add_subcommand("nmr", "Simulated NMR experiment: spectrum and multiplet integral");
    add_source(nmr_cmd);
    nmr_cmd->add_option("--phi", o.phi, "Ancilla phase shift (rad)");
    nmr_cmd->add_option("--config", o.config_path, "Acquisition config JSON");
    nmr_cmd->add_option("--out", o.out_path, "Spectrum CSV output path");
    add_manifest(nmr_cmd);

    auto* oracle = app.add_subcommand("oracle", "Random closed paths: lift sign vs crossing parity vs MES phase");
    oracle->add_option("--trials", o.trials, "Number of paths")->check(CLI::PositiveNumber);
    oracle->add_option("--seed", o.seed, "Random seed");
    oracle->add_option("--step", o.step, "Sampling step (rad)")->check(CLI::Range(1e-6, kTol.max_step));
    oracle->add_option("--waypoints", o.waypoints, "Random legs per path")->check(CLI::PositiveNumber);
    add_manifest(oracle);

    std::vector<std::string> argv_store{"topophase"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        for (auto* sub : {classify, phase, interf, nmr_cmd}) {
            if (sub->parsed() && o.class_name.empty() && o.trajectory_path.empty()) {
                err << "error: one of --class or --trajectory is required\n";
                return kUsage;
            }
        }
        if (classify->parsed()) {
            return cmd_classify(o, out);
        }
        if (phase->parsed()) {
            return cmd_phase(o, out);
        }
        if (interf->parsed()) {
            return cmd_interferogram(o, out);
        }
        if (nmr_cmd->parsed()) {
            return cmd_nmr(o, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(o, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Io ? kIo : kFailure;
    }
    return kUsage;
}

}  // namespace topophase::cli
