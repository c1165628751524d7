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

#include "zzuv/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzuv {

FpPoly::FpPoly(PrimeField f, std::vector<std::int64_t> coeffs) : f_(f) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.push_back(f_.reduce(v));
    trim();
}

FpPoly FpPoly::x_pow_n_minus_1(PrimeField f, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("x^n - 1 requires n >= 1");
    FpPoly r(f);
    r.c_.assign(n + 1, 0);
    r.c_[0] = f.neg(1);
    r.c_[n] = 1;
    return r;
}

FpPoly FpPoly::monomial(PrimeField f, std::uint32_t c, std::uint32_t k) {
    FpPoly r(f);
    c %= f.p();
    if (c != 0) {
        r.c_.assign(k + 1, 0);
        r.c_[k] = c;
    }
    return r;
}

std::uint32_t FpPoly::eval(std::uint32_t x0) const noexcept {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x0), c_[i]);
    return acc;
}

FpPoly FpPoly::operator+(const FpPoly& rhs) const {
    FpPoly r(f_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_.add(coeff(i), rhs.coeff(i));
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& rhs) const {
    FpPoly r(f_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_.sub(coeff(i), rhs.coeff(i));
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& rhs) const {
    FpPoly r(f_);
    if (is_zero() || rhs.is_zero()) return r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], rhs.c_[j]));
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(f_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.neg(c_[i]);
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
    FpPoly r(f_);
    c %= f_.p();
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.mul(c_[i], c);
    return r;
}

FpPoly FpPoly::shifted(std::uint32_t k) const {
    FpPoly r(f_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    return scaled(f_.inv(c_.back()));
}

FpPoly FpPoly::mod_xn_minus_1(std::uint32_t n) const {
    if (n == 0) throw std::invalid_argument("cyclic reduction requires n >= 1");
    FpPoly r(f_);
    r.c_.assign(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i % n] = f_.add(r.c_[i % n], c_[i]);
    r.trim();
    return r;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& num, const FpPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero divisor polynomial");
    const PrimeField& f = num.field();
    FpPoly quot(f);
    FpPoly rem = num;
    const std::int64_t dd = den.degree();
    const std::uint32_t lead_inv = f.inv(den.leading());
    if (rem.degree() >= dd) {
        std::vector<std::int64_t> q(static_cast<std::size_t>(rem.degree() - dd) + 1, 0);
        while (rem.degree() >= dd) {
            const std::int64_t k = rem.degree() - dd;
            const std::uint32_t c = f.mul(rem.leading(), lead_inv);
            q[static_cast<std::size_t>(k)] = c;
            rem = rem - den.scaled(c).shifted(static_cast<std::uint32_t>(k));
        }
        quot = FpPoly(f, std::move(q));
    }
    return {quot, rem};
}

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

bool divides(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero()) throw std::invalid_argument("divisibility by zero polynomial");
    return poly_divmod(b, a).second.is_zero();
}

}  // namespace zzuv
