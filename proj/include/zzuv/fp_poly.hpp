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

#ifndef ZZUV_FP_POLY_HPP
#define ZZUV_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zzuv/field.hpp"

namespace zzuv {

/// Dense polynomial over Z_p, coefficients ascending by degree, always in
/// canonical form (no trailing zero coefficient). The zero polynomial is
/// the empty coefficient sequence and its degree is kDegZero.
class FpPoly {
   public:
    /// Degree marker of the zero polynomial (stands in for "-infinity").
    static constexpr std::int64_t kDegZero = -1;

    explicit FpPoly(PrimeField f) : f_(f) {}
    FpPoly(PrimeField f, std::vector<std::int64_t> coeffs);

    static FpPoly zero(PrimeField f) { return FpPoly(f); }
    static FpPoly one(PrimeField f) { return FpPoly(f, {1}); }
    static FpPoly x(PrimeField f) { return FpPoly(f, {0, 1}); }
    /// x^n - 1, n >= 1.
    static FpPoly x_pow_n_minus_1(PrimeField f, std::uint32_t n);
    /// c * x^k.
    static FpPoly monomial(PrimeField f, std::uint32_t c, std::uint32_t k);

    const PrimeField& field() const noexcept { return f_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    std::uint32_t eval(std::uint32_t x0) const noexcept;

    FpPoly operator+(const FpPoly& rhs) const;
    FpPoly operator-(const FpPoly& rhs) const;
    FpPoly operator*(const FpPoly& rhs) const;
    FpPoly operator-() const;
    FpPoly scaled(std::uint32_t c) const;
    /// Multiply by x^k.
    FpPoly shifted(std::uint32_t k) const;
    FpPoly monic() const;
    /// Remainder mod x^n - 1 (cyclic reduction).
    FpPoly mod_xn_minus_1(std::uint32_t n) const;

    bool operator==(const FpPoly& rhs) const noexcept {
        return f_ == rhs.f_ && c_ == rhs.c_;
    }

    /// Human-readable form, e.g. "x^2 + 2x + 1"; "0" for the zero polynomial.
    std::string str() const;

   private:
    PrimeField f_;
    std::vector<std::uint32_t> c_;

    void trim() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Euclidean division: num = den * quot + rem, deg(rem) < deg(den).
/// Throws std::invalid_argument("zero divisor polynomial") if den = 0.
std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& num, const FpPoly& den);

/// Monic greatest common divisor; gcd(a, 0) = monic(a). Throws on gcd(0, 0).
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

/// True iff a divides b; a must be nonzero.
bool divides(const FpPoly& a, const FpPoly& b);

}  // namespace zzuv

#endif
