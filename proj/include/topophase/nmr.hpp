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

// Pulse-level simulation of a three-spin liquid-state NMR processor with a
// diagonal (weak-coupling) Hamiltonian
//
//     H = sum_i w_i I_z^i + 2 pi sum_{i<j} J_ij I_z^i I_z^j     [rad/s]
//
// Hard pulses are instantaneous. Density operators are traceless deviation
// operators (declared trace 0) unless stated otherwise.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topophase/quantum_core.hpp"
#include "topophase/so3_topology.hpp"
#include "topophase/trajectories.hpp"

namespace topophase::nmr {

inline constexpr int kSpins = 3;
inline constexpr std::size_t kDim = 8;

class SpinSystem {
public:
    /// offsets in rad/s (rotating frame); couplings in Hz, symmetric with a
    /// zero diagonal (throws InvalidArgument otherwise).
    SpinSystem(const std::array<double, 3>& offsets, const std::array<std::array<double, 3>, 3>& couplings_hz);

    const std::array<double, 3>& offsets() const noexcept { return offsets_; }
    double offset(int spin) const { return offsets_.at(static_cast<std::size_t>(spin)); }
    double coupling(int a, int b) const {
        return couplings_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    }

private:
    std::array<double, 3> offsets_;
    std::array<std::array<double, 3>, 3> couplings_;
};

/// Three 19F spins of iodotrifluoroethylene; spin 1 is the frame reference.
SpinSystem default_system();

enum class Axis { X, Y, Z };

/// I_axis of one spin embedded in the 8-dimensional space.
CMatrix spin_operator(int spin, Axis axis);

/// Diagonal of H in the computational basis, rad/s.
std::array<double, kDim> hamiltonian_diagonal(const SpinSystem& sys);
CMatrix hamiltonian(const SpinSystem& sys);

struct HardPulse {
    std::vector<int> targets;
    double phase;  // rotation axis cos(phase) x + sin(phase) y
    double flip;
};
struct Delay {
    double duration;  // seconds
};
struct Crusher {};
struct ZRotation {
    int target;
    double angle;  // exp(-i angle I_z)
};

using PulseEvent = std::variant<HardPulse, Delay, Crusher, ZRotation>;

/// Ordered events; compiled sequences also carry the ideal propagator they
/// realize and the achieved fidelity.
class PulseSequence {
public:
    /// Throws InvalidArgument on an out-of-range flip, negative duration,
    /// empty or invalid targets.
    explicit PulseSequence(std::vector<PulseEvent> events, std::optional<UnitaryGate> intended = std::nullopt);

    const std::vector<PulseEvent>& events() const noexcept { return events_; }
    const std::optional<UnitaryGate>& intended() const noexcept { return intended_; }

    /// Sum of delay durations, seconds.
    double total_delay() const;

    PulseSequence& append(const PulseSequence& other);

private:
    std::vector<PulseEvent> events_;
    std::optional<UnitaryGate> intended_;
};

DensityOperator evolve(const DensityOperator& rho, const SpinSystem& sys, double t);
DensityOperator hard_pulse(const DensityOperator& rho, std::span<const int> targets, double phase, double flip);
DensityOperator hard_pulse(const DensityOperator& rho, std::initializer_list<int> targets, double phase, double flip);
DensityOperator z_rotation(const DensityOperator& rho, int target, double angle);

/// Keeps only zero-quantum elements (equal total magnetization).
DensityOperator crusher(const DensityOperator& rho);

/// epsilon (|000><000| - I/8)
DensityOperator pseudo_pure(double epsilon = 1e-5);

DensityOperator run_sequence(const DensityOperator& rho, const SpinSystem& sys, const PulseSequence& seq);

/// Unitary realized by `seq` on the 8-dimensional space. Throws
/// InvalidArgument if the sequence contains a crusher.
CMatrix sequence_propagator(const SpinSystem& sys, const PulseSequence& seq);

/// |Tr(ideal^dagger achieved)| / dim
double propagator_fidelity(const CMatrix& ideal, const CMatrix& achieved);

/// Controlled rotation of `target` by `seg`, conditioned on `control` being
/// |1>: tilt of the target's z axis onto the rotation axis, a J(control,
/// target) evolution block with the third spin and all shifts refocused,
/// a frame z-rotation and the inverse tilt. Throws FidelityBelowThreshold
/// if the simulated propagator misses the ideal one by more than 1e-3.
PulseSequence compile_controlled(const Segment& seg, const SpinSystem& sys, int control, int target);

/// compile_controlled(seg, sys, 0, 1)
PulseSequence compile_controlled_segment(const Segment& seg, const SpinSystem& sys);

/// CNOT(control -> target) as a controlled pi rotation about x plus a
/// frame z-rotation of the control.
PulseSequence compile_cnot(const SpinSystem& sys, int control, int target);

/// Duration of the coupling block that produces a conditional rotation by
/// `angle`: |angle| / (2 pi |J|).
double coupling_block_duration(double angle, double j_hz);

struct AcquisitionParams {
    int detect = 0;
    double dwell = 2.5e-4;         // seconds
    std::size_t npoints = 8192;    // power of two >= 1024
    double t2eff = 0.2;            // seconds; <= 0 disables apodization
    double demodulation = 0.0;     // rad/s subtracted from every frequency
};

/// s[k] = Tr(rho(k dwell) (I_x + i I_y)) exp(-k dwell / T2eff), demodulated.
/// Throws NyquistViolation or InvalidArgument.
std::vector<cplx> acquire_fid(const DensityOperator& rho, const SpinSystem& sys, const AcquisitionParams& params);

struct Spectrum {
    std::vector<double> frequencies;  // Hz, uniform, centered on 0
    std::vector<cplx> values;         // real part = absorption
    double resolution() const { return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0; }
};

/// dwell * DFT of the FID (first point scaled by `first_point_scale`),
/// zero-order phase `phase0` applied, zero frequency in the middle.
Spectrum spectrum(std::span<const cplx> fid, double dwell, double phase0 = 0.0, double first_point_scale = 0.5);

/// Complex sum of spectrum values with frequency in [lo, hi] times the
/// resolution. Throws EmptyBand.
cplx integrate_band(const Spectrum& spec, double lo_hz, double hi_hz);

/// Real part of integrate_band().
double integrate_multiplet(const Spectrum& spec, double lo_hz, double hi_hz);

struct SpectralLine {
    double frequency;  // Hz, parabolic interpolation around the extremum
    double height;     // signed absorption at the extremum bin
};

/// Local extrema of |Re| inside the band exceeding `rel_threshold` times the
/// band's largest |Re|.
std::vector<SpectralLine> find_lines(const Spectrum& spec, double lo_hz, double hi_hz, double rel_threshold = 0.1);

/// "freq_hz,real,imag" header, 15 significant digits.
std::string spectrum_csv(const Spectrum& spec);

struct NmrConfig {
    double dwell_s = 2.5e-4;
    std::size_t npoints = 8192;
    double t2eff_s = 0.2;
    double phase0_rad = 0.0;
    double epsilon = 1e-5;
    double band_hz = 200.0;  // half-width of the integration band around the ancilla
    bool auto_phase = true;  // calibrate the zero-order phase on the "+" reference
};

/// Throws SchemaViolation on malformed JSON or wrong types.
NmrConfig load_config(std::string_view document);

enum class TrajectoryClass { Plus, Minus };

Trajectory catalog_trajectory(TrajectoryClass c);

struct NmrCalibration {
    double phase_correction;     // total zero-order phase applied to every spectrum
    double reference_magnitude;  // |band integral| of the "+" experiment at phi = 0
};

struct NmrResult {
    Spectrum spectrum;
    double integral;             // phased band integral
    double normalized_integral;  // integral / reference magnitude
    NmrCalibration calibration;
    DensityOperator final_state;
};

/// Pulse sequence of the whole experiment after pseudo-pure preparation:
/// Bell pair on spins 1,2, ancilla superposition, controlled segments, ancilla
/// phase shift phi.
PulseSequence experiment_sequence(const Trajectory& traj, double phi, const SpinSystem& sys);

NmrCalibration calibrate(const SpinSystem& sys, const NmrConfig& config);

/// pseudo_pure -> experiment_sequence -> FID of spin 0 demodulated at its
/// offset -> spectrum -> band integral normalized by the calibration.
NmrResult run_nmr_trajectory(const Trajectory& traj, double phi, const SpinSystem& sys, const NmrConfig& config,
                             const std::optional<NmrCalibration>& calibration = std::nullopt);

NmrResult run_nmr_experiment(TrajectoryClass c, double phi, const SpinSystem& sys, const NmrConfig& config,
                             const std::optional<NmrCalibration>& calibration = std::nullopt);

}  // namespace topophase::nmr
