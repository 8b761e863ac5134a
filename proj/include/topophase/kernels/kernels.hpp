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

// Inner loops of the simulator. Each kernel has a scalar reference version
// and, on x86-64, an AVX2/FMA version; the dispatcher picks one at runtime.
// All arrays are row-major, std::complex<double> interleaved, unaligned.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>

namespace topophase::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True if this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available ISA on this machine.
Isa detected_isa() noexcept;

/// ISA currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Pin the dispatcher to `isa` (or restore auto-detection with nullopt).
/// Unavailable ISAs are ignored. Not thread-safe; meant for tests and benchmarks.
void force_isa(std::optional<Isa> isa) noexcept;

// c[rows x cols] = a[rows x inner] * b[inner x cols]. `c` must not alias a or b.
void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept;

// out[i] = a[i] * b[i]. `out` may alias a or b.
void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept;

// out[k] += sum_j amps[j] * steps[j]^k for k < npoints (geometric phasor sums).
void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept;

}  // namespace topophase::kernels
