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

#include <algorithm>
#include <cmath>
#include <string>

#include "topophase/error.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase::nmr {
namespace {

int third_spin(int a, int b) { return 3 - a - b; }

// Evolution under J(control, target) only, for `duration` seconds: the third
// spin is flipped in the middle of each half and all spins at the end of each
// half, so shifts and both couplings to the third spin average to zero.
void append_coupling_block(std::vector<PulseEvent>& events, double duration, int control, int target) {
    const double quarter = duration / 4.0;
    const std::vector<int> other{third_spin(control, target)};
    const std::vector<int> all{0, 1, 2};
    for (int half = 0; half < 2; ++half) {
        events.emplace_back(Delay{quarter});
        events.emplace_back(HardPulse{other, 0.0, kPi});
        events.emplace_back(Delay{quarter});
        events.emplace_back(HardPulse{all, 0.0, kPi});
    }
}

}  // namespace

double coupling_block_duration(double angle, double j_hz) { return std::abs(angle) / (kTwoPi * std::abs(j_hz)); }

PulseSequence compile_controlled(const Segment& seg, const SpinSystem& sys, int control, int target) {
    if (control < 0 || control >= kSpins || target < 0 || target >= kSpins || control == target) {
        throw Error(ErrorCode::InvalidIndex, "control and target must be distinct spins");
    }
    if (!(seg.angle() > -kTwoPi && seg.angle() <= kTwoPi)) {
        throw Error(ErrorCode::InvalidArgument, "segment angle must lie in (-2pi, 2pi]");
    }
    const UnitaryGate ideal(embed(controlled_gate(segment_unitary(seg)).matrix(), kSpins, {control, target}));
    if (seg.angle() == 0.0) {
        return PulseSequence({}, ideal);
    }
    const double j = sys.coupling(control, target);
    if (std::abs(j) < 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "control and target are not coupled");
    }

    // C-R_n(theta) = exp(-i theta/2 n.I_t) exp(i theta I_z^c n.I_t). With a tilt
    // V taking z to m = sign * n (m_z >= 0):
    //   C-R = V exp(-i sign theta/2 I_z^t) exp(i sign theta I_z^c I_z^t) V^dagger.
    const Vec3& n = seg.axis();
    const double sign = n[2] >= 0.0 ? 1.0 : -1.0;
    const Vec3 m = sign * n;
    const double tilt = std::acos(std::clamp(m[2], -1.0, 1.0));
    const double tilt_phase = std::atan2(m[0], -m[1]);
    const bool tilted = tilt > 1e-15;

    // Free J evolution gives exp(-i 2 pi J T I_z^c I_z^t); a pair of control
    // inversions flips its sign when needed.
    const double wanted = -sign * seg.angle();
    const bool invert_control = wanted * j < 0.0;
    const std::vector<int> tgt{target};
    const std::vector<int> ctl{control};

    std::vector<PulseEvent> events;
    if (tilted) {
        events.emplace_back(HardPulse{tgt, tilt_phase + kPi, tilt});
    }
    if (invert_control) {
        events.emplace_back(HardPulse{ctl, 0.0, kPi});
    }
    append_coupling_block(events, coupling_block_duration(seg.angle(), j), control, target);
    if (invert_control) {
        events.emplace_back(HardPulse{ctl, 0.0, kPi});
    }
    events.emplace_back(ZRotation{target, sign * seg.angle() / 2.0});
    if (tilted) {
        events.emplace_back(HardPulse{tgt, tilt_phase, tilt});
    }

    PulseSequence seq(std::move(events), ideal);
    const double fidelity = propagator_fidelity(ideal.matrix(), sequence_propagator(sys, seq));
    if (fidelity < kTol.min_fidelity) {
        throw Error(ErrorCode::FidelityBelowThreshold,
                    "compiled controlled rotation reaches fidelity " + std::to_string(fidelity));
    }
    return seq;
}

PulseSequence compile_controlled_segment(const Segment& seg, const SpinSystem& sys) {
    return compile_controlled(seg, sys, 0, 1);
}

PulseSequence compile_cnot(const SpinSystem& sys, int control, int target) {
    // CNOT = diag(1, i)_control * C-R_x(pi)
    PulseSequence seq = compile_controlled(Segment({1.0, 0.0, 0.0}, kPi), sys, control, target);
    std::vector<PulseEvent> events = seq.events();
    events.emplace_back(ZRotation{control, kPi / 2.0});
    const UnitaryGate ideal(embed(controlled_gate(UnitaryGate(pauli::x())).matrix(), kSpins, {control, target}));
    PulseSequence out(std::move(events), ideal);
    const double fidelity = propagator_fidelity(ideal.matrix(), sequence_propagator(sys, out));
    if (fidelity < kTol.min_fidelity) {
        throw Error(ErrorCode::FidelityBelowThreshold, "compiled CNOT reaches fidelity " + std::to_string(fidelity));
    }
    return out;
}

}  // namespace topophase::nmr
