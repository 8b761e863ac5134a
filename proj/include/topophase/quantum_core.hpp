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

// Small-dimension state, gate and density-operator arithmetic.
//
// Qubit 0 is the leftmost tensor factor; basis index bits are big-endian, so
// for three qubits |q0 q1 q2> has index 4*q0 + 2*q1 + q2. |0> is spin-up
// (I_z = +1/2).

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "topophase/cmatrix.hpp"
#include "topophase/vec3.hpp"

namespace topophase {

/// Normalized pure state over n qubits.
class QuantumState {
public:
    /// Throws InvalidState unless amplitudes.size() == 2^n_qubits and the norm is 1.
    QuantumState(int n_qubits, std::vector<cplx> amplitudes);

    static QuantumState basis(int n_qubits, std::size_t index);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    cplx operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

    QuantumState operator-() const;

private:
    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

/// Unitary on 2^k dimensions (k targeted qubits).
class UnitaryGate {
public:
    /// Throws InvalidGate if the matrix is not square power-of-two unitary.
    explicit UnitaryGate(CMatrix m);

    const CMatrix& matrix() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return m_.rows(); }
    int n_qubits() const noexcept { return n_qubits_; }
    cplx operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

    /// this * other (other acts first).
    UnitaryGate then_after(const UnitaryGate& other) const;

private:
    CMatrix m_;
    int n_qubits_;
};

/// Hermitian operator over n spins with a declared trace (1 for states,
/// 0 for traceless deviation operators).
class DensityOperator {
public:
    /// Throws InvalidState on wrong shape, non-Hermitian entries or trace mismatch.
    DensityOperator(int n_spins, CMatrix m, double declared_trace);

    static DensityOperator pure(const QuantumState& psi);

    int n_spins() const noexcept { return n_spins_; }
    const CMatrix& matrix() const noexcept { return m_; }
    double declared_trace() const noexcept { return trace_; }
    cplx operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

    /// U rho U^dagger; keeps the declared trace.
    DensityOperator transformed(const CMatrix& u) const;

private:
    int n_spins_;
    CMatrix m_;
    double trace_;
};

/// exp(-i angle/2 axis.sigma). Throws InvalidAxis unless |axis| = 1 within 1e-9.
UnitaryGate rotation_gate(const Vec3& axis, double angle);

/// Block-diagonal [I, u] with the control as the leading qubit.
UnitaryGate controlled_gate(const UnitaryGate& u);

/// Applies `gate` to the ordered `targets` (targets[0] is the gate's most
/// significant qubit). Throws DimensionMismatch, RepeatedTarget, InvalidIndex.
QuantumState apply_gate(const QuantumState& state, const UnitaryGate& gate, std::span<const int> targets);
QuantumState apply_gate(const QuantumState& state, const UnitaryGate& gate, std::initializer_list<int> targets);

/// Full 2^n operator of `op` acting on the ordered `targets`, identity elsewhere.
CMatrix embed(const CMatrix& op, int n_qubits, std::span<const int> targets);
CMatrix embed(const CMatrix& op, int n_qubits, std::initializer_list<int> targets);

/// <a|b>
cplx overlap(const QuantumState& a, const QuantumState& b);

/// Tr(rho O); throws NonHermitian for a non-Hermitian observable.
double expectation(const DensityOperator& rho, const CMatrix& observable);

/// Reduced operator on the (sorted) `keep` qubits.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep);

}  // namespace topophase
