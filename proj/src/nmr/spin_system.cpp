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

#include "topophase/error.hpp"
#include "topophase/nmr.hpp"
#include "topophase/numeric_policy.hpp"

namespace topophase::nmr {

SpinSystem::SpinSystem(const std::array<double, 3>& offsets, const std::array<std::array<double, 3>, 3>& couplings_hz)
    : offsets_(offsets), couplings_(couplings_hz) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (couplings_[i][i] != 0.0) {
            throw Error(ErrorCode::InvalidArgument, "coupling matrix must have a zero diagonal");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (couplings_[i][j] != couplings_[j][i]) {
                throw Error(ErrorCode::InvalidArgument, "coupling matrix must be symmetric");
            }
        }
    }
}

SpinSystem default_system() {
    // Only shift differences are known: w1 - w2 = 12.02 kHz, w2 - w3 = 17.33 kHz.
    const double j01 = 64.2;
    const double j02 = 51.3;
    const double j12 = -129.0;
    return SpinSystem({kTwoPi * 12020.0, 0.0, -kTwoPi * 17330.0},
                      {{{0.0, j01, j02}, {j01, 0.0, j12}, {j02, j12, 0.0}}});
}

CMatrix spin_operator(int spin, Axis axis) {
    CMatrix half;
    switch (axis) {
        case Axis::X: half = pauli::x(); break;
        case Axis::Y: half = pauli::y(); break;
        case Axis::Z: half = pauli::z(); break;
    }
    half *= 0.5;
    return embed(half, kSpins, {spin});
}

std::array<double, kDim> hamiltonian_diagonal(const SpinSystem& sys) {
    std::array<double, kDim> diag{};
    for (std::size_t index = 0; index < kDim; ++index) {
        std::array<double, 3> m{};
        for (int s = 0; s < kSpins; ++s) {
            m[static_cast<std::size_t>(s)] = ((index >> (kSpins - 1 - s)) & 1U) ? -0.5 : 0.5;
        }
        double e = 0.0;
        for (int i = 0; i < kSpins; ++i) {
            e += sys.offset(i) * m[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < kSpins; ++j) {
                e += kTwoPi * sys.coupling(i, j) * m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)];
            }
        }
        diag[index] = e;
    }
    return diag;
}

CMatrix hamiltonian(const SpinSystem& sys) {
    const auto diag = hamiltonian_diagonal(sys);
    std::array<cplx, kDim> c{};
    for (std::size_t i = 0; i < kDim; ++i) {
        c[i] = diag[i];
    }
    return CMatrix::diagonal(c);
}

}  // namespace topophase::nmr
