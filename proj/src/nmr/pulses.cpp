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
#include <string>

#include "topophase/error.hpp"
#include "topophase/kernels/kernels.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase::nmr {
namespace {

void validate_targets(std::span<const int> targets) {
    if (targets.empty()) {
        throw Error(ErrorCode::EmptyTargets, "hard pulse needs at least one target spin");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= kSpins) {
            throw Error(ErrorCode::InvalidIndex, "spin index " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw Error(ErrorCode::RepeatedTarget, "spin listed twice in a pulse");
            }
        }
    }
}

// Product of the same single-spin unitary on each target.
CMatrix product_unitary(std::span<const int> targets, const CMatrix& single) {
    CMatrix full = CMatrix::identity(1);
    for (int s = 0; s < kSpins; ++s) {
        bool hit = false;
        for (int t : targets) {
            hit = hit || t == s;
        }
        full = kron(full, hit ? single : CMatrix::identity(2));
    }
    return full;
}

CMatrix pulse_unitary(std::span<const int> targets, double phase, double flip) {
    validate_targets(targets);
    return product_unitary(targets, rotation_gate({std::cos(phase), std::sin(phase), 0.0}, flip).matrix());
}

CMatrix z_unitary(int target, double angle) {
    const int t[] = {target};
    validate_targets(t);
    return product_unitary(t, rotation_gate({0.0, 0.0, 1.0}, angle).matrix());
}

CMatrix delay_unitary(const SpinSystem& sys, double t) {
    const auto e = hamiltonian_diagonal(sys);
    std::array<cplx, kDim> d{};
    for (std::size_t i = 0; i < kDim; ++i) {
        d[i] = std::polar(1.0, -e[i] * t);
    }
    return CMatrix::diagonal(d);
}

int magnetization2(std::size_t index) {
    // Twice the total I_z: +1 per |0>, -1 per |1>.
    int m = 0;
    for (int s = 0; s < kSpins; ++s) {
        m += ((index >> s) & 1U) ? -1 : 1;
    }
    return m;
}

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

PulseSequence::PulseSequence(std::vector<PulseEvent> events, std::optional<UnitaryGate> intended)
    : events_(std::move(events)), intended_(std::move(intended)) {
    for (const auto& ev : events_) {
        std::visit(Overloaded{
                       [](const HardPulse& p) {
                           validate_targets(p.targets);
                           if (!(p.flip > -kTwoPi && p.flip <= kTwoPi)) {
                               throw Error(ErrorCode::InvalidArgument, "flip angle must lie in (-2pi, 2pi]");
                           }
                       },
                       [](const Delay& d) {
                           if (!(d.duration >= 0.0)) {
                               throw Error(ErrorCode::NegativeTime, "delay must be non-negative");
                           }
                       },
                       [](const Crusher&) {},
                       [](const ZRotation& z) {
                           const int t[] = {z.target};
                           validate_targets(t);
                       },
                   },
                   ev);
    }
    if (intended_ && intended_->dimension() != kDim) {
        throw Error(ErrorCode::DimensionMismatch, "intended gate must act on all three spins");
    }
}

double PulseSequence::total_delay() const {
    double total = 0.0;
    for (const auto& ev : events_) {
        if (const auto* d = std::get_if<Delay>(&ev)) {
            total += d->duration;
        }
    }
    return total;
}

PulseSequence& PulseSequence::append(const PulseSequence& other) {
    events_.insert(events_.end(), other.events_.begin(), other.events_.end());
    if (intended_ && other.intended_) {
        intended_ = other.intended_->then_after(*intended_);
    } else {
        intended_.reset();
    }
    return *this;
}

DensityOperator evolve(const DensityOperator& rho, const SpinSystem& sys, double t) {
    if (!(t >= 0.0)) {
        throw Error(ErrorCode::NegativeTime, "evolution time must be non-negative");
    }
    if (rho.n_spins() != kSpins) {
        throw Error(ErrorCode::DimensionMismatch, "NMR evolution needs a three-spin operator");
    }
    const auto e = hamiltonian_diagonal(sys);
    CMatrix phases(kDim, kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            phases(r, c) = std::polar(1.0, -(e[r] - e[c]) * t);
        }
    }
    CMatrix out(kDim, kDim);
    kernels::cmul(kDim * kDim, rho.matrix().data().data(), phases.data().data(), out.data().data());
    return DensityOperator(kSpins, std::move(out), rho.declared_trace());
}

DensityOperator hard_pulse(const DensityOperator& rho, std::span<const int> targets, double phase, double flip) {
    return rho.transformed(pulse_unitary(targets, phase, flip));
}

DensityOperator hard_pulse(const DensityOperator& rho, std::initializer_list<int> targets, double phase, double flip) {
    return hard_pulse(rho, std::span<const int>(targets.begin(), targets.size()), phase, flip);
}

DensityOperator z_rotation(const DensityOperator& rho, int target, double angle) {
    return rho.transformed(z_unitary(target, angle));
}

DensityOperator crusher(const DensityOperator& rho) {
    if (rho.n_spins() != kSpins) {
        throw Error(ErrorCode::DimensionMismatch, "crusher acts on three-spin operators");
    }
    CMatrix out = rho.matrix();
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            if (magnetization2(r) != magnetization2(c)) {
                out(r, c) = 0.0;
            }
        }
    }
    return DensityOperator(kSpins, std::move(out), rho.declared_trace());
}

DensityOperator pseudo_pure(double epsilon) {
    if (!(epsilon > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "polarization epsilon must be positive");
    }
    CMatrix m = CMatrix::identity(kDim);
    m *= -epsilon / 8.0;
    m(0, 0) += epsilon;
    return DensityOperator(kSpins, std::move(m), 0.0);
}

DensityOperator run_sequence(const DensityOperator& rho, const SpinSystem& sys, const PulseSequence& seq) {
    DensityOperator state = rho;
    for (const auto& ev : seq.events()) {
        state = std::visit(Overloaded{
                               [&](const HardPulse& p) { return hard_pulse(state, p.targets, p.phase, p.flip); },
                               [&](const Delay& d) { return evolve(state, sys, d.duration); },
                               [&](const Crusher&) { return crusher(state); },
                               [&](const ZRotation& z) { return z_rotation(state, z.target, z.angle); },
                           },
                           ev);
    }
    return state;
}

CMatrix sequence_propagator(const SpinSystem& sys, const PulseSequence& seq) {
    CMatrix u = CMatrix::identity(kDim);
    for (const auto& ev : seq.events()) {
        const CMatrix step = std::visit(
            Overloaded{
                [&](const HardPulse& p) { return pulse_unitary(p.targets, p.phase, p.flip); },
                [&](const Delay& d) { return delay_unitary(sys, d.duration); },
                [&](const Crusher&) -> CMatrix {
                    throw Error(ErrorCode::InvalidArgument, "a sequence with a crusher has no propagator");
                },
                [&](const ZRotation& z) { return z_unitary(z.target, z.angle); },
            },
            ev);
        u = step * u;
    }
    return u;
}

double propagator_fidelity(const CMatrix& ideal, const CMatrix& achieved) {
    if (ideal.rows() != achieved.rows() || !ideal.is_square() || !achieved.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "propagators differ in dimension");
    }
    return std::abs((ideal.adjoint() * achieved).trace()) / static_cast<double>(ideal.rows());
}

}  // namespace topophase::nmr
