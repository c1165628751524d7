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

#ifndef ZZUV_RPOLY_HPP
#define ZZUV_RPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zzuv/fp_poly.hpp"
#include "zzuv/relem.hpp"

namespace zzuv {

/// Dense polynomial over the local ring Z_p + uZ_p + vZ_p, ascending
/// degree, canonical (no trailing zero coefficient).
class RPoly {
   public:
    static constexpr std::int64_t kDegZero = FpPoly::kDegZero;

    explicit RPoly(PrimeField f) : f_(f) {}
    RPoly(PrimeField f, std::vector<RElem> coeffs);

    static RPoly zero(PrimeField f) { return RPoly(f); }
    static RPoly one(PrimeField f) { return RPoly(f, {RElem::one(f)}); }
    static RPoly x(PrimeField f) { return RPoly(f, {RElem::zero(f), RElem::one(f)}); }
    static RPoly constant(RElem e) { return RPoly(e.field(), {e}); }
    /// Embedding of a Z_p polynomial (free parts only).
    static RPoly embed(const FpPoly& p);
    /// u*a + v*b for Z_p polynomials a, b.
    static RPoly u_times(const FpPoly& a);
    static RPoly v_times(const FpPoly& b);
    /// x^beta - lambda.
    static RPoly x_pow_n_minus_lambda(PrimeField f, std::uint32_t n, const RElem& lambda);

    const PrimeField& field() const noexcept { return f_; }
    const std::vector<RElem>& coeffs() const noexcept { return c_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    RElem leading() const { return c_.empty() ? RElem::zero(f_) : c_.back(); }
    RElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RElem::zero(f_); }

    /// rho applied coefficientwise: the image in Z_p[x].
    FpPoly rho() const;
    /// True iff the polynomial is a non-zero-divisor in R[x], which for this
    /// ring is equivalent to rho(f) != 0.
    bool is_regular() const noexcept;
    /// True iff every coefficient has zero u and v parts.
    bool is_fp() const noexcept;

    RPoly operator+(const RPoly& rhs) const;
    RPoly operator-(const RPoly& rhs) const;
    RPoly operator*(const RPoly& rhs) const;
    RPoly operator-() const;
    RPoly scaled(const RElem& e) const;
    RPoly shifted(std::uint32_t k) const;

    bool operator==(const RPoly& rhs) const noexcept { return f_ == rhs.f_ && c_ == rhs.c_; }

    std::string str() const;

   private:
    PrimeField f_;
    std::vector<RElem> c_;

    void trim() noexcept {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Division by a divisor whose leading coefficient is a unit of R:
/// num = den * quot + rem with rem = 0 or deg(rem) < deg(den).
/// Throws std::invalid_argument("zero divisor polynomial") for den = 0 and
/// std::invalid_argument("leading coefficient not invertible") when the
/// leading coefficient of den is not a unit. Division by a regular divisor
/// with non-unit leading coefficient is deliberately not implemented; no
/// construction here divides by one.
std::pair<RPoly, RPoly> rpoly_divmod_leadunit(const RPoly& num, const RPoly& den);

/// True iff den divides num exactly (den unit-leading).
bool rpoly_divides(const RPoly& den, const RPoly& num);

/// Product of f and g reduced mod x^beta - lambda (x^beta rewrites to
/// lambda). lambda must be a unit; beta >= 1.
RPoly rpoly_mul_mod(const RPoly& f, const RPoly& g, std::uint32_t beta, const RElem& lambda);

/// Reduction of f mod x^beta - lambda.
RPoly rpoly_mod(const RPoly& f, std::uint32_t beta, const RElem& lambda);

}  // namespace zzuv

#endif
