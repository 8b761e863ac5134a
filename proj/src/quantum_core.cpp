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

#include "topophase/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topophase/error.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase {
namespace {

int log2_exact(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        return -1;
    }
    int k = 0;
    while ((std::size_t{1} << k) < dim) {
        ++k;
    }
    return k;
}

// Bit mask of qubit q in an n-qubit big-endian index.
std::size_t qubit_mask(int n, int q) { return std::size_t{1} << (n - 1 - q); }

void validate_targets(int n, std::span<const int> targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n) {
            throw Error(ErrorCode::InvalidIndex, "qubit index " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw Error(ErrorCode::RepeatedTarget, "qubit " + std::to_string(targets[i]) + " listed twice");
            }
        }
    }
}

// Full index for the sub-index `s` of the targets, merged into `base`.
std::size_t scatter(std::size_t base, std::size_t s, int n, std::span<const int> targets) {
    const std::size_t k = targets.size();
    for (std::size_t t = 0; t < k; ++t) {
        if ((s >> (k - 1 - t)) & 1U) {
            base |= qubit_mask(n, targets[t]);
        }
    }
    return base;
}

std::size_t gather(std::size_t index, int n, std::span<const int> targets) {
    std::size_t s = 0;
    for (int q : targets) {
        s = (s << 1) | ((index & qubit_mask(n, q)) ? 1U : 0U);
    }
    return s;
}

std::size_t targets_mask(int n, std::span<const int> targets) {
    std::size_t mask = 0;
    for (int q : targets) {
        mask |= qubit_mask(n, q);
    }
    return mask;
}

}  // namespace

QuantumState::QuantumState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 1 || n_qubits_ > 16 || amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw Error(ErrorCode::InvalidState, "amplitude count must be 2^n_qubits");
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kTol.algebraic) {
        throw Error(ErrorCode::InvalidState, "state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
}

QuantumState QuantumState::basis(int n_qubits, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw Error(ErrorCode::InvalidIndex, "basis index out of range");
    }
    amps[index] = 1.0;
    return QuantumState(n_qubits, std::move(amps));
}

QuantumState QuantumState::operator-() const {
    std::vector<cplx> amps(amplitudes_);
    for (auto& a : amps) {
        a = -a;
    }
    return QuantumState(n_qubits_, std::move(amps));
}

UnitaryGate::UnitaryGate(CMatrix m) : m_(std::move(m)), n_qubits_(log2_exact(m_.rows())) {
    if (!m_.is_square() || n_qubits_ < 1) {
        throw Error(ErrorCode::InvalidGate, "gate must be a square matrix of dimension 2^k");
    }
    if (!is_unitary(m_, kTol.algebraic)) {
        throw Error(ErrorCode::InvalidGate, "matrix is not unitary");
    }
}

UnitaryGate UnitaryGate::then_after(const UnitaryGate& other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "gate dimensions differ");
    }
    return UnitaryGate(m_ * other.m_);
}

DensityOperator::DensityOperator(int n_spins, CMatrix m, double declared_trace)
    : n_spins_(n_spins), m_(std::move(m)), trace_(declared_trace) {
    if (n_spins_ < 1 || n_spins_ > 8 || !m_.is_square() || m_.rows() != (std::size_t{1} << n_spins_)) {
        throw Error(ErrorCode::InvalidState, "density operator must be 2^n x 2^n");
    }
    if (!is_hermitian(m_, kTol.algebraic)) {
        throw Error(ErrorCode::NonHermitian, "density operator is not Hermitian");
    }
    if (std::abs(m_.trace() - cplx{declared_trace}) > kTol.algebraic) {
        throw Error(ErrorCode::InvalidState, "trace differs from the declared value");
    }
}

DensityOperator DensityOperator::pure(const QuantumState& psi) {
    const std::size_t d = psi.dimension();
    CMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return DensityOperator(psi.n_qubits(), std::move(m), 1.0);
}

DensityOperator DensityOperator::transformed(const CMatrix& u) const {
    if (u.rows() != m_.rows() || !u.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimension differs from the density operator");
    }
    CMatrix out = conjugate(u, m_);
    // Symmetrize away the rounding asymmetry of the triple product.
    CMatrix herm = out.adjoint();
    herm += out;
    herm *= 0.5;
    return DensityOperator(n_spins_, std::move(herm), trace_);
}

UnitaryGate rotation_gate(const Vec3& axis, double angle) {
    if (std::abs(norm(axis) - 1.0) > kTol.geometric) {
        throw Error(ErrorCode::InvalidAxis, "rotation axis must be a unit vector");
    }
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const cplx i{0.0, 1.0};
    // cos(a/2) I - i sin(a/2) (nx X + ny Y + nz Z)
    CMatrix m(2, 2,
              {cplx{c, -s * axis[2]}, -i * s * cplx{axis[0], -axis[1]},  //
               -i * s * cplx{axis[0], axis[1]}, cplx{c, s * axis[2]}});
    return UnitaryGate(std::move(m));
}

UnitaryGate controlled_gate(const UnitaryGate& u) {
    const std::size_t d = u.dimension();
    CMatrix m(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            m(d + i, d + j) = u(i, j);
        }
    }
    return UnitaryGate(std::move(m));
}

QuantumState apply_gate(const QuantumState& state, const UnitaryGate& gate, std::span<const int> targets) {
    const int n = state.n_qubits();
    validate_targets(n, targets);
    if (gate.dimension() != (std::size_t{1} << targets.size())) {
        throw Error(ErrorCode::DimensionMismatch, "gate dimension does not match the number of targets");
    }
    const std::size_t k = gate.dimension();
    const std::size_t tmask = targets_mask(n, targets);
    std::vector<cplx> out(state.dimension());
    std::vector<std::size_t> idx(k);
    for (std::size_t base = 0; base < state.dimension(); ++base) {
        if (base & tmask) {
            continue;
        }
        for (std::size_t s = 0; s < k; ++s) {
            idx[s] = scatter(base, s, n, targets);
        }
        for (std::size_t r = 0; r < k; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < k; ++c) {
                acc += gate(r, c) * state[idx[c]];
            }
            out[idx[r]] = acc;
        }
    }
    return QuantumState(n, std::move(out));
}

QuantumState apply_gate(const QuantumState& state, const UnitaryGate& gate, std::initializer_list<int> targets) {
    return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

CMatrix embed(const CMatrix& op, int n_qubits, std::span<const int> targets) {
    validate_targets(n_qubits, targets);
    if (!op.is_square() || op.rows() != (std::size_t{1} << targets.size())) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimension does not match the number of targets");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t tmask = targets_mask(n_qubits, targets);
    CMatrix full(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~tmask) == (c & ~tmask)) {
                full(r, c) = op(gather(r, n_qubits, targets), gather(c, n_qubits, targets));
            }
        }
    }
    return full;
}

CMatrix embed(const CMatrix& op, int n_qubits, std::initializer_list<int> targets) {
    return embed(op, n_qubits, std::span<const int>(targets.begin(), targets.size()));
}

cplx overlap(const QuantumState& a, const QuantumState& b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    cplx acc{};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double expectation(const DensityOperator& rho, const CMatrix& observable) {
    if (observable.rows() != rho.matrix().rows() || !observable.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "observable dimension differs from the density operator");
    }
    if (!is_hermitian(observable, kTol.observable)) {
        throw Error(ErrorCode::NonHermitian, "observable is not Hermitian");
    }
    const std::size_t d = observable.rows();
    cplx acc{};
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            acc += rho(r, c) * observable(c, r);
        }
    }
    if (std::abs(acc.imag()) > kTol.observable) {
        throw Error(ErrorCode::NonHermitian, "expectation has an imaginary residue");
    }
    return acc.real();
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
    const int n = rho.n_spins();
    if (keep.empty()) {
        throw Error(ErrorCode::InvalidIndex, "keep set is empty");
    }
    validate_targets(n, keep);
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    const std::size_t dk = std::size_t{1} << kept.size();
    const std::size_t dt = std::size_t{1} << traced.size();
    CMatrix out(dk, dk);
    for (std::size_t r = 0; r < dk; ++r) {
        const std::size_t rbase = scatter(0, r, n, kept);
        for (std::size_t c = 0; c < dk; ++c) {
            const std::size_t cbase = scatter(0, c, n, kept);
            cplx acc{};
            for (std::size_t e = 0; e < dt; ++e) {
                const std::size_t env = scatter(0, e, n, traced);
                acc += rho(rbase | env, cbase | env);
            }
            out(r, c) = acc;
        }
    }
    return DensityOperator(static_cast<int>(kept.size()), std::move(out), rho.declared_trace());
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace topophase
