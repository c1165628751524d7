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

#ifndef ZZUV_FIELD_HPP
#define ZZUV_FIELD_HPP

#include <cstdint>

namespace zzuv {

/// The prime field Z_p for a small prime 2 <= p <= 257. Primality is
/// checked at construction; a composite modulus is rejected rather than
/// silently producing a non-field.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return (a * b) % p_;  // a, b < 257 so a*b < 2^32
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField&) const noexcept = default;

   private:
    std::uint32_t p_;
};

}  // namespace zzuv

#endif
