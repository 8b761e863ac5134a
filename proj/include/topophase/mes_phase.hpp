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

// Maximally entangled two-qubit states and the sign they pick up when one
// qubit is carried around a closed rotation circuit.

#pragma once

#include <optional>

#include "topophase/quantum_core.hpp"
#include "topophase/trajectories.hpp"

namespace topophase {

/// alpha, beta with |alpha|^2 + |beta|^2 = 1.
class MESCoefficients {
public:
    /// Throws Unnormalized.
    MESCoefficients(cplx alpha, cplx beta);

    cplx alpha() const noexcept { return alpha_; }
    cplx beta() const noexcept { return beta_; }

private:
    cplx alpha_;
    cplx beta_;
};

/// sqrt(1/2) (alpha|00> + beta|01> - beta*|10> + alpha*|11>)
QuantumState mes_state(const MESCoefficients& c);

/// (|00> + |11>)/sqrt(2)
QuantumState bell_state();

/// (u x I) state
QuantumState apply_local(const QuantumState& state, const UnitaryGate& u);

/// Both single-qubit reduced operators equal I/2 within 1e-10.
bool is_mes(const QuantumState& state);

/// Coefficients of `state` if it belongs to the mes_state() family (read
/// off the |00> and |01> amplitudes, checked against the other two).
std::optional<MESCoefficients> mes_coefficients(const QuantumState& state, double tol = 1e-10);

/// <Bell| (U_traj x I) |Bell>, segments applied in order.
cplx trajectory_overlap(const Trajectory& traj);

/// +1 or -1 from the overlap above. Throws NonCyclicEvolution when the
/// overlap is not +-1 within 1e-9.
int trajectory_phase(const Trajectory& traj);

}  // namespace topophase
