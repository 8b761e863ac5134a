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

#include <cmath>

#include "json.hpp"
#include "topophase/error.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase::nmr {
namespace {

PulseSequence single_pulse(const SpinSystem& sys, PulseEvent ev) {
    PulseSequence bare({std::move(ev)});
    return PulseSequence(bare.events(), UnitaryGate(sequence_propagator(sys, bare)));
}

struct Measurement {
    Spectrum spectrum;
    cplx band_integral;
    DensityOperator final_state;
};

Measurement measure(const Trajectory& traj, double phi, const SpinSystem& sys, const NmrConfig& config,
                    double phase) {
    DensityOperator rho = run_sequence(pseudo_pure(config.epsilon), sys, experiment_sequence(traj, phi, sys));
    AcquisitionParams acq;
    acq.detect = 0;
    acq.dwell = config.dwell_s;
    acq.npoints = config.npoints;
    acq.t2eff = config.t2eff_s;
    acq.demodulation = sys.offset(0);
    const auto fid = acquire_fid(rho, sys, acq);
    Spectrum spec = spectrum(fid, config.dwell_s, phase);
    const cplx integral = integrate_band(spec, -config.band_hz, config.band_hz);
    return {std::move(spec), integral, std::move(rho)};
}

}  // namespace

NmrConfig load_config(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaViolation, std::string("malformed config JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::SchemaViolation, "config must be a JSON object");
    }
    NmrConfig cfg;
    auto number = [&](const char* key, double& slot) {
        if (doc.contains(key)) {
            if (!doc[key].is_number()) {
                throw Error(ErrorCode::SchemaViolation, std::string("config field '") + key + "' must be a number");
            }
            slot = doc[key].get<double>();
        }
    };
    number("dwell_s", cfg.dwell_s);
    number("t2eff_s", cfg.t2eff_s);
    number("phase0_rad", cfg.phase0_rad);
    number("epsilon", cfg.epsilon);
    number("band_hz", cfg.band_hz);
    if (doc.contains("npoints")) {
        if (!doc["npoints"].is_number_integer() || doc["npoints"].get<long long>() <= 0) {
            throw Error(ErrorCode::SchemaViolation, "config field 'npoints' must be a positive integer");
        }
        cfg.npoints = doc["npoints"].get<std::size_t>();
    }
    if (doc.contains("auto_phase")) {
        if (!doc["auto_phase"].is_boolean()) {
            throw Error(ErrorCode::SchemaViolation, "config field 'auto_phase' must be a boolean");
        }
        cfg.auto_phase = doc["auto_phase"].get<bool>();
    }
    return cfg;
}

Trajectory catalog_trajectory(TrajectoryClass c) {
    return c == TrajectoryClass::Plus ? plus_trajectory() : minus_trajectory();
}

PulseSequence experiment_sequence(const Trajectory& traj, double phi, const SpinSystem& sys) {
    if (!traj.closed()) {
        throw Error(ErrorCode::OpenTrajectory, "experiment needs a closed trajectory");
    }
    // Bell pair on spins 1, 2, then the ancilla superposition.
    PulseSequence seq = single_pulse(sys, HardPulse{{1}, kPi / 2.0, kPi / 2.0});
    seq.append(compile_cnot(sys, 1, 2));
    seq.append(single_pulse(sys, HardPulse{{0}, kPi / 2.0, kPi / 2.0}));
    for (const auto& segment : traj.segments()) {
        seq.append(compile_controlled_segment(segment, sys));
    }
    seq.append(single_pulse(sys, ZRotation{0, phi}));
    return seq;
}

NmrCalibration calibrate(const SpinSystem& sys, const NmrConfig& config) {
    const Measurement ref = measure(plus_trajectory(), 0.0, sys, config, config.phase0_rad);
    const double magnitude = std::abs(ref.band_integral);
    if (!(magnitude > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "reference experiment produced no signal in the band");
    }
    const double correction = config.auto_phase ? config.phase0_rad - std::arg(ref.band_integral) : config.phase0_rad;
    return {correction, magnitude};
}

NmrResult run_nmr_trajectory(const Trajectory& traj, double phi, const SpinSystem& sys, const NmrConfig& config,
                             const std::optional<NmrCalibration>& calibration) {
    const NmrCalibration calib = calibration ? *calibration : calibrate(sys, config);
    Measurement m = measure(traj, phi, sys, config, calib.phase_correction);
    const double integral = m.band_integral.real();
    return NmrResult{std::move(m.spectrum), integral, integral / calib.reference_magnitude, calib,
                     std::move(m.final_state)};
}

NmrResult run_nmr_experiment(TrajectoryClass c, double phi, const SpinSystem& sys, const NmrConfig& config,
                             const std::optional<NmrCalibration>& calibration) {
    return run_nmr_trajectory(catalog_trajectory(c), phi, sys, config, calibration);
}

}  // namespace topophase::nmr
