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

#include "kernels_impl.hpp"

namespace topophase::kernels::scalar {

void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept {
    for (std::size_t i = 0; i < rows; ++i) {
        cplx* crow = c + i * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            crow[j] = cplx{};
        }
        for (std::size_t p = 0; p < inner; ++p) {
            const cplx aip = a[i * inner + p];
            const cplx* brow = b + p * cols;
            for (std::size_t j = 0; j < cols; ++j) {
                crow[j] += aip * brow[j];
            }
        }
    }
}

void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] * b[i];
    }
}

void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept {
    for (std::size_t j = 0; j < nterms; ++j) {
        cplx z = amps[j];
        const cplx s = steps[j];
        for (std::size_t k = 0; k < npoints; ++k) {
            out[k] += z;
            z *= s;
        }
    }
}

}  // namespace topophase::kernels::scalar
