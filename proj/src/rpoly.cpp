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

#include "zzuv/rpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzuv {

RPoly::RPoly(PrimeField f, std::vector<RElem> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const RElem& e : c_)
        if (!(e.field() == f_)) throw std::invalid_argument("mixed-field coefficients");
    trim();
}

RPoly RPoly::embed(const FpPoly& p) {
    RPoly r(p.field());
    r.c_.reserve(p.coeffs().size());
    for (std::uint32_t c : p.coeffs()) r.c_.push_back(RElem(p.field(), c, 0, 0));
    return r;
}

RPoly RPoly::u_times(const FpPoly& a) {
    RPoly r(a.field());
    r.c_.reserve(a.coeffs().size());
    for (std::uint32_t c : a.coeffs()) r.c_.push_back(RElem(a.field(), 0, c, 0));
    r.trim();
    return r;
}

RPoly RPoly::v_times(const FpPoly& b) {
    RPoly r(b.field());
    r.c_.reserve(b.coeffs().size());
    for (std::uint32_t c : b.coeffs()) r.c_.push_back(RElem(b.field(), 0, 0, c));
    r.trim();
    return r;
}

RPoly RPoly::x_pow_n_minus_lambda(PrimeField f, std::uint32_t n, const RElem& lambda) {
    if (n == 0) throw std::invalid_argument("x^n - lambda requires n >= 1");
    RPoly r(f);
    r.c_.assign(n + 1, RElem::zero(f));
    r.c_[0] = -lambda;
    r.c_[n] = RElem::one(f);
    return r;
}

FpPoly RPoly::rho() const {
    std::vector<std::int64_t> out;
    out.reserve(c_.size());
    for (const RElem& e : c_) out.push_back(e.rho());
    return FpPoly(f_, std::move(out));
}

bool RPoly::is_regular() const noexcept {
    for (const RElem& e : c_)
        if (e.rho() != 0) return true;
    return false;
}

bool RPoly::is_fp() const noexcept {
    for (const RElem& e : c_)
        if (e.b() != 0 || e.c() != 0) return false;
    return true;
}

RPoly RPoly::operator+(const RPoly& rhs) const {
    RPoly r(f_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), RElem::zero(f_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + rhs.coeff(i);
    r.trim();
    return r;
}

RPoly RPoly::operator-(const RPoly& rhs) const {
    RPoly r(f_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), RElem::zero(f_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - rhs.coeff(i);
    r.trim();
    return r;
}

RPoly RPoly::operator*(const RPoly& rhs) const {
    RPoly r(f_);
    if (is_zero() || rhs.is_zero()) return r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, RElem::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * rhs.c_[j];
    }
    r.trim();
    return r;
}

RPoly RPoly::operator-() const {
    RPoly r(f_);
    r.c_.reserve(c_.size());
    for (const RElem& e : c_) r.c_.push_back(-e);
    return r;
}

RPoly RPoly::scaled(const RElem& e) const {
    RPoly r(f_);
    r.c_.reserve(c_.size());
    for (const RElem& x : c_) r.c_.push_back(x * e);
    r.trim();
    return r;
}

RPoly RPoly::shifted(std::uint32_t k) const {
    RPoly r(f_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, RElem::zero(f_));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

std::string RPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        const bool plain_one = c_[i].is_one();
        if (i == 0 || !plain_one) s += "(" + c_[i].str() + ")";
        if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

std::pair<RPoly, RPoly> rpoly_divmod_leadunit(const RPoly& num, const RPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero divisor polynomial");
    if (!den.leading().is_unit())
        throw std::invalid_argument("leading coefficient not invertible");
    const PrimeField f = num.field();
    const RElem lead_inv = den.leading().inverse();
    const std::int64_t dd = den.degree();
    RPoly quot(f), rem = num;
    std::vector<RElem> q;
    if (rem.degree() >= dd)
        q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, RElem::zero(f));
    while (rem.degree() >= dd) {
        const std::int64_t k = rem.degree() - dd;
        const RElem c = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(k)] = c;
        rem = rem - den.scaled(c).shifted(static_cast<std::uint32_t>(k));
    }
    if (!q.empty()) quot = RPoly(f, std::move(q));
    return {quot, rem};
}

bool rpoly_divides(const RPoly& den, const RPoly& num) {
    return rpoly_divmod_leadunit(num, den).second.is_zero();
}

RPoly rpoly_mod(const RPoly& f, std::uint32_t beta, const RElem& lambda) {
    if (beta == 0) throw std::invalid_argument("quotient modulus requires beta >= 1");
    if (!lambda.is_unit()) throw std::invalid_argument("lambda must be a unit");
    const PrimeField fld = f.field();
    std::vector<RElem> out(beta, RElem::zero(fld));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        // x^i = lambda^(i div beta) * x^(i mod beta)
        const RElem w = lambda.pow(i / beta);
        out[i % beta] = out[i % beta] + f.coeffs()[i] * w;
    }
    return RPoly(fld, std::move(out));
}

RPoly rpoly_mul_mod(const RPoly& f, const RPoly& g, std::uint32_t beta, const RElem& lambda) {
    return rpoly_mod(f * g, beta, lambda);
}

}  // namespace zzuv
