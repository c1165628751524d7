/*
   Copyright 2026 The zzuv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// AVX2 variants of the packed-word kernels. 16 symbols per vector; all
// values < p <= 257, so 16-bit lanes never wrap on add (2p <= 514) and
// signed compares are exact.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstdint>

#include "zzuv/kernels.hpp"

namespace zzuv::kernels::avx2 {

void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i vpm1 = _mm256_set1_epi16(static_cast<short>(p - 1));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_add_epi16(va, vb);
        __m256i over = _mm256_cmpgt_epi16(s, vpm1);
        s = _mm256_sub_epi16(s, _mm256_and_si256(over, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    scalar::add_mod(dst + i, a + i, b + i, n - i, p);
}

std::size_t count_nonzero(const sym* a, std::size_t n) noexcept {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t nz = 0;
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i eq = _mm256_cmpeq_epi16(va, zero);
        // movemask yields 2 bits per 16-bit lane
        unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(eq));
        nz += 16 - std::popcount(mask) / 2;
    }
    nz += scalar::count_nonzero(a + i, n - i);
    return nz;
}

sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi32(acc, _mm256_madd_epi16(va, vb));
    }
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = 0;
    for (int k = 0; k < 8; ++k) total += static_cast<std::uint64_t>(lanes[k]);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<sym>(total % p);
}

}  // namespace zzuv::kernels::avx2

#endif
