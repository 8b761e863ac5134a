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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace topophase::kernels::avx2 {
namespace {

// Two complex<double> per register: [re0 im0 re1 im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d mul2(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// Scalar complex `s` broadcast against the pair `b`.
inline __m256d mul_bcast(__m256d s_re, __m256d s_im, __m256d b) {
    const __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(s_re, b, _mm256_mul_pd(s_im, b_sw));
}

}  // namespace

void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept {
    const std::size_t cols2 = cols & ~std::size_t{1};
    for (std::size_t i = 0; i < rows; ++i) {
        cplx* crow = c + i * cols;
        std::size_t j = 0;
        for (; j < cols2; j += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t p = 0; p < inner; ++p) {
                const cplx aip = a[i * inner + p];
                acc = _mm256_add_pd(acc, mul_bcast(_mm256_set1_pd(aip.real()), _mm256_set1_pd(aip.imag()),
                                                   load2(b + p * cols + j)));
            }
            store2(crow + j, acc);
        }
        for (; j < cols; ++j) {
            cplx acc{};
            for (std::size_t p = 0; p < inner; ++p) {
                acc += a[i * inner + p] * b[p * cols + j];
            }
            crow[j] = acc;
        }
    }
}

void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(out + i, mul2(load2(a + i), load2(b + i)));
    }
    for (; i < n; ++i) {
        out[i] = a[i] * b[i];
    }
}

void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept {
    std::size_t j = 0;
    // Four terms per iteration (two registers), folded into one output point.
    for (; j + 4 <= nterms; j += 4) {
        __m256d z0 = load2(amps + j);
        __m256d z1 = load2(amps + j + 2);
        const __m256d s0 = load2(steps + j);
        const __m256d s1 = load2(steps + j + 2);
        for (std::size_t k = 0; k < npoints; ++k) {
            const __m256d sum = _mm256_add_pd(z0, z1);
            const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(sum), _mm256_extractf128_pd(sum, 1));
            double* o = reinterpret_cast<double*>(out + k);
            _mm_storeu_pd(o, _mm_add_pd(_mm_loadu_pd(o), folded));
            z0 = mul2(z0, s0);
            z1 = mul2(z1, s1);
        }
    }
    for (; j + 2 <= nterms; j += 2) {
        __m256d z = load2(amps + j);
        const __m256d s = load2(steps + j);
        for (std::size_t k = 0; k < npoints; ++k) {
            const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(z), _mm256_extractf128_pd(z, 1));
            double* o = reinterpret_cast<double*>(out + k);
            _mm_storeu_pd(o, _mm_add_pd(_mm_loadu_pd(o), folded));
            z = mul2(z, s);
        }
    }
    for (; j < nterms; ++j) {
        cplx z = amps[j];
        for (std::size_t k = 0; k < npoints; ++k) {
            out[k] += z;
            z *= steps[j];
        }
    }
}

}  // namespace topophase::kernels::avx2
