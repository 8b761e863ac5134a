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

#include "topophase/kernels/kernels.hpp"

namespace topophase::kernels {

namespace scalar {
void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept;
void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept;
void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept;
}  // namespace scalar

#if defined(TOPOPHASE_HAS_AVX2)
namespace avx2 {
void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept;
void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept;
void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept;
}  // namespace avx2
#endif

}  // namespace topophase::kernels
