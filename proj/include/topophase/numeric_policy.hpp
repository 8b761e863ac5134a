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

#pragma once

#include <numbers>

namespace topophase {

/// Every tolerance used by the library lives here so property tests and
/// validation share one set of knobs.
struct NumericPolicy {
    double algebraic = 1e-12;        // norms, unitarity, hermiticity of constructed objects
    double geometric = 1e-9;         // unit axes, SO(3) closure of segment lists
    double observable = 1e-10;       // hermiticity of user observables, imaginary residue of expectations
    double path_closure = 1e-6;      // quaternion distance of a sampled path end to +-identity
    double surface_touch = 1e-12;    // |w| below which a sample lies on the SO(3) ball surface
    double cyclic_overlap = 1e-9;    // |<initial|final>| deficit tolerated for a cyclic evolution
    double mes_reduced = 1e-10;      // reduced operators vs I/2
    double default_step = 0.005;     // radians per sample along a path
    double max_step = 0.01;
    double min_fidelity = 0.999;     // compiled pulse sequence vs ideal propagator
};

inline constexpr NumericPolicy kTol{};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace topophase
