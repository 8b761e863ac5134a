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

#include "topophase/interferometer.hpp"

#include <cstdio>

#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase {

UnitaryGate pseudo_hadamard() { return rotation_gate({0.0, 1.0, 0.0}, kPi / 2.0); }

UnitaryGate cnot() { return controlled_gate(UnitaryGate(pauli::x())); }

UnitaryGate phase_gate(double phi) { return rotation_gate({0.0, 0.0, 1.0}, phi); }

QuantumState build_initial() {
    QuantumState psi = QuantumState::basis(3, 0);
    psi = apply_gate(psi, pseudo_hadamard(), {1});
    psi = apply_gate(psi, cnot(), {1, 2});
    psi = apply_gate(psi, pseudo_hadamard(), {0});
    return psi;
}

QuantumState controlled_trajectory_state(const Trajectory& traj) {
    if (!traj.closed()) {
        throw Error(ErrorCode::OpenTrajectory, "interferometer needs a closed trajectory");
    }
    QuantumState psi = build_initial();
    for (const auto& seg : traj.segments()) {
        psi = apply_gate(psi, controlled_gate(segment_unitary(seg)), {0, 1});
    }
    return psi;
}

double run(const Trajectory& traj, double phi) {
    const QuantumState psi = apply_gate(controlled_trajectory_state(traj), phase_gate(phi), {0});
    const CMatrix sx = embed(pauli::x(), 3, {0});
    return expectation(DensityOperator::pure(psi), sx);
}

std::vector<InterferogramPoint> interferogram(const Trajectory& traj, std::span<const double> phis) {
    if (phis.empty()) {
        throw Error(ErrorCode::InvalidArgument, "interferogram needs at least one phase");
    }
    // The controlled circuit does not depend on phi; only the phase gate does.
    const QuantumState before = controlled_trajectory_state(traj);
    const CMatrix sx = embed(pauli::x(), 3, {0});
    std::vector<InterferogramPoint> points;
    points.reserve(phis.size());
    for (double phi : phis) {
        const QuantumState psi = apply_gate(before, phase_gate(phi), {0});
        points.push_back({phi, expectation(DensityOperator::pure(psi), sx)});
    }
    return points;
}

std::vector<double> phase_grid(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "phase grid needs at least one point");
    }
    std::vector<double> phis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        phis[static_cast<std::size_t>(i)] = kTwoPi * i / n;
    }
    return phis;
}

std::string interferogram_csv(std::span<const InterferogramPoint> points) {
    std::string out = "phi,expectation\n";
    char line[96];
    for (const auto& p : points) {
        std::snprintf(line, sizeof line, "%.15g,%.15g\n", p.phi, p.value);
        out += line;
    }
    return out;
}

}  // namespace topophase
