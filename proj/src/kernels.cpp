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

#include "zzuv/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace zzuv::kernels {

namespace scalar {

void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        sym s = static_cast<sym>(a[i] + b[i]);
        dst[i] = s >= p ? static_cast<sym>(s - p) : s;
    }
}

std::size_t count_nonzero(const sym* a, std::size_t n) noexcept {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += a[i] != 0;
    return w;
}

sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<sym>(acc % p);
}

void scale_mod(sym* dst, const sym* a, sym c, std::size_t n, sym p) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<sym>((static_cast<std::uint32_t>(a[i]) * c) % p);
}

}  // namespace scalar

namespace {

bool backend_available(Backend b) noexcept {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend detect() noexcept {
    if (const char* env = std::getenv("ZZUV_KERNELS")) {
        std::string_view v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
        if (v == "neon" && backend_available(Backend::neon)) return Backend::neon;
    }
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active() noexcept { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool set_backend(Backend b) noexcept {
    if (!backend_available(b)) return false;
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

bool set_backend(std::string_view name) noexcept {
    if (name == "scalar") return set_backend(Backend::scalar);
    if (name == "avx2") return set_backend(Backend::avx2);
    if (name == "neon") return set_backend(Backend::neon);
    return false;
}

void add_mod(sym* dst, const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: avx2::add_mod(dst, a, b, n, p); return;
#endif
#if defined(__aarch64__)
        case Backend::neon: neon::add_mod(dst, a, b, n, p); return;
#endif
        default: scalar::add_mod(dst, a, b, n, p); return;
    }
}

std::size_t count_nonzero(const sym* a, std::size_t n) noexcept {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return avx2::count_nonzero(a, n);
#endif
#if defined(__aarch64__)
        case Backend::neon: return neon::count_nonzero(a, n);
#endif
        default: return scalar::count_nonzero(a, n);
    }
}

sym dot_mod(const sym* a, const sym* b, std::size_t n, sym p) noexcept {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return avx2::dot_mod(a, b, n, p);
#endif
#if defined(__aarch64__)
        case Backend::neon: return neon::dot_mod(a, b, n, p);
#endif
        default: return scalar::dot_mod(a, b, n, p);
    }
}

void scale_mod(sym* dst, const sym* a, sym c, std::size_t n, sym p) noexcept {
    scalar::scale_mod(dst, a, c, n, p);
}

}  // namespace zzuv::kernels
