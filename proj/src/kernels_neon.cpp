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

// NEON variants of the packed-word kernels. 8 symbols per vector.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "zzuv/kernels.hpp"

namespace zzuv::kernels::neon {

void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    const uint16x8_t vp = vdupq_n_u16(p);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t s = vaddq_u16(vld1q_u16(a + i), vld1q_u16(b + i));
        uint16x8_t over = vcgeq_u16(s, vp);
        s = vsubq_u16(s, vandq_u16(over, vp));
        vst1q_u16(dst + i, s);
    }
    scalar::add_mod(dst + i, a + i, b + i, n - i, p);
}

std::size_t count_nonzero(const sym* a, std::size_t n) noexcept {
    std::size_t nz = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t va = vld1q_u16(a + i);
        // nonzero lanes compare to all-ones; shift to 1 per lane and sum
        uint16x8_t m = vshrq_n_u16(vtstq_u16(va, va), 15);
        nz += vaddvq_u16(m);
    }
    nz += scalar::count_nonzero(a + i, n - i);
    return nz;
}

sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    uint32x4_t acc = vdupq_n_u32(0);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t va = vld1q_u16(a + i);
        uint16x8_t vb = vld1q_u16(b + i);
        acc = vaddq_u32(acc, vmull_u16(vget_low_u16(va), vget_low_u16(vb)));
        acc = vaddq_u32(acc, vmull_u16(vget_high_u16(va), vget_high_u16(vb)));
    }
    std::uint64_t total = vaddlvq_u32(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<sym>(total % p);
}

}  // namespace zzuv::kernels::neon

#endif
