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

#ifndef ZZUV_KERNELS_HPP
#define ZZUV_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace zzuv::kernels {

/// Symbol type for packed codewords: a residue mod p, p <= 257.
using sym = std::uint16_t;

enum class Backend { scalar, avx2, neon };

/// Currently selected backend. Resolved once at first use from the CPU
/// (AVX2 on x86-64, NEON on aarch64) unless overridden by the
/// ZZUV_KERNELS environment variable ("scalar", "avx2", "neon").
Backend active() noexcept;

const char* backend_name(Backend b) noexcept;

/// Force a backend; returns false (and leaves the selection unchanged)
/// if the requested backend is not compiled in or not supported here.
bool set_backend(Backend b) noexcept;
bool set_backend(std::string_view name) noexcept;

/// dst[i] = a[i] + b[i] mod p. dst may alias a or b. Requires a[i], b[i] < p.
void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept;

/// Number of nonzero symbols in a[0..n).
std::size_t count_nonzero(const sym* a, std::size_t n) noexcept;

/// sum(a[i] * b[i]) mod p. Requires a[i], b[i] < p and n <= 1e5.
sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept;

/// dst[i] = a[i] * c mod p. Scalar reference only (not a hot path).
void scale_mod(sym* dst, const sym* a, sym c, std::size_t n, sym p) noexcept;

/// Scalar reference implementations, always available. The dispatched
/// entry points above must agree with these exactly; the equivalence
/// suite checks that on every supported backend.
namespace scalar {
void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept;
std::size_t count_nonzero(const sym* a, std::size_t n) noexcept;
sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept;
void scale_mod(sym* dst, const sym* a, sym c, std::size_t n, sym p) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept;
std::size_t count_nonzero(const sym* a, std::size_t n) noexcept;
sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept;
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept;
std::size_t count_nonzero(const sym* a, std::size_t n) noexcept;
sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept;
}  // namespace neon
#endif

}  // namespace zzuv::kernels

#endif
