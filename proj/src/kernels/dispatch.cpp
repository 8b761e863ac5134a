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

#include <atomic>

#include "kernels_impl.hpp"

namespace topophase::kernels {
namespace {

struct KernelTable {
    decltype(&scalar::cgemm) cgemm;
    decltype(&scalar::cmul) cmul;
    decltype(&scalar::phasor_accumulate) phasor_accumulate;
};

constexpr KernelTable kScalarTable{&scalar::cgemm, &scalar::cmul, &scalar::phasor_accumulate};
#if defined(TOPOPHASE_HAS_AVX2)
constexpr KernelTable kAvx2Table{&avx2::cgemm, &avx2::cmul, &avx2::phasor_accumulate};
#endif

bool cpu_has_avx2() noexcept {
#if defined(TOPOPHASE_HAS_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<int> g_forced{-1};

const KernelTable& table_for(Isa isa) noexcept {
#if defined(TOPOPHASE_HAS_AVX2)
    if (isa == Isa::Avx2) {
        return kAvx2Table;
    }
#endif
    (void)isa;
    return kScalarTable;
}

const KernelTable& active_table() noexcept { return table_for(active_isa()); }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2: {
            static const bool has = cpu_has_avx2();
            return has;
        }
    }
    return false;
}

Isa detected_isa() noexcept { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() noexcept {
    const int forced = g_forced.load(std::memory_order_relaxed);
    return forced < 0 ? detected_isa() : static_cast<Isa>(forced);
}

void force_isa(std::optional<Isa> isa) noexcept {
    if (!isa) {
        g_forced.store(-1, std::memory_order_relaxed);
    } else if (isa_available(*isa)) {
        g_forced.store(static_cast<int>(*isa), std::memory_order_relaxed);
    }
}

void cgemm(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
           cplx* c) noexcept {
    active_table().cgemm(rows, inner, cols, a, b, c);
}

void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) noexcept {
    active_table().cmul(n, a, b, out);
}

void phasor_accumulate(std::size_t nterms, const cplx* amps, const cplx* steps, std::size_t npoints,
                       cplx* out) noexcept {
    active_table().phasor_accumulate(nterms, amps, steps, npoints, out);
}

}  // namespace topophase::kernels
