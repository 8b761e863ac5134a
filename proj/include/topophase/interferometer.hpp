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

// Circuit-level ancilla interferometer: |000> -> Bell pair on qubits 1,2 ->
// ancilla superposition -> trajectory on qubit 1 controlled by the ancilla ->
// ancilla phase gate exp(-i phi I_z) -> <sigma_x> of the ancilla.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "topophase/quantum_core.hpp"
#include "topophase/trajectories.hpp"

namespace topophase {

/// exp(-i (pi/2) I_y)
UnitaryGate pseudo_hadamard();

/// Control is the leading qubit.
UnitaryGate cnot();

/// exp(-i phi I_z)
UnitaryGate phase_gate(double phi);

/// (|0> + |1>)/sqrt(2) x (|00> + |11>)/sqrt(2), built gate by gate from |000>.
QuantumState build_initial();

/// State after the controlled trajectory, before the phase gate. Throws
/// OpenTrajectory.
QuantumState controlled_trajectory_state(const Trajectory& traj);

/// <sigma_x> of the ancilla; equals cos(phi - gamma) with gamma 0 for the
/// "+" class and pi for the "-" class.
double run(const Trajectory& traj, double phi);

struct InterferogramPoint {
    double phi;
    double value;
};

/// Throws InvalidArgument on an empty phi list.
std::vector<InterferogramPoint> interferogram(const Trajectory& traj, std::span<const double> phis);

/// n equally spaced phases over [0, 2pi).
std::vector<double> phase_grid(int n);

/// "phi,expectation" header, one row per point, 15 significant digits.
std::string interferogram_csv(std::span<const InterferogramPoint> points);

}  // namespace topophase
