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

#include "topophase/mes_phase.hpp"

#include <cmath>

#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase {

MESCoefficients::MESCoefficients(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kTol.algebraic) {
        throw Error(ErrorCode::Unnormalized, "|alpha|^2 + |beta|^2 must equal 1");
    }
}

QuantumState mes_state(const MESCoefficients& c) {
    const double h = std::sqrt(0.5);
    return QuantumState(2, {h * c.alpha(), h * c.beta(), -h * std::conj(c.beta()), h * std::conj(c.alpha())});
}

QuantumState bell_state() { return mes_state(MESCoefficients(1.0, 0.0)); }

QuantumState apply_local(const QuantumState& state, const UnitaryGate& u) {
    if (state.n_qubits() != 2 || u.dimension() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "local action needs a two-qubit state and a single-qubit gate");
    }
    return apply_gate(state, u, {0});
}

bool is_mes(const QuantumState& state) {
    if (state.n_qubits() != 2) {
        return false;
    }
    const auto rho = DensityOperator::pure(state);
    const CMatrix half = 0.5 * CMatrix::identity(2);
    return max_abs_diff(partial_trace(rho, {0}).matrix(), half) <= kTol.mes_reduced &&
           max_abs_diff(partial_trace(rho, {1}).matrix(), half) <= kTol.mes_reduced;
}

std::optional<MESCoefficients> mes_coefficients(const QuantumState& state, double tol) {
    if (state.n_qubits() != 2) {
        return std::nullopt;
    }
    const double r2 = std::sqrt(2.0);
    const cplx alpha = r2 * state[0];
    const cplx beta = r2 * state[1];
    if (std::abs(r2 * state[2] + std::conj(beta)) > tol || std::abs(r2 * state[3] - std::conj(alpha)) > tol) {
        return std::nullopt;
    }
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol) {
        return std::nullopt;
    }
    // Renormalize the rounding so the constructor's 1e-12 check holds.
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    return MESCoefficients(alpha / n, beta / n);
}

cplx trajectory_overlap(const Trajectory& traj) {
    const QuantumState initial = bell_state();
    QuantumState state = initial;
    for (const auto& seg : traj.segments()) {
        state = apply_local(state, segment_unitary(seg));
    }
    return overlap(initial, state);
}

int trajectory_phase(const Trajectory& traj) {
    const cplx ov = trajectory_overlap(traj);
    if (std::abs(ov) < 1.0 - kTol.cyclic_overlap || std::abs(ov.imag()) > kTol.cyclic_overlap) {
        throw Error(ErrorCode::NonCyclicEvolution,
                    "trajectory '" + traj.name() + "' does not return the entangled pair to +-(initial state)");
    }
    return ov.real() > 0.0 ? +1 : -1;
}

}  // namespace topophase
