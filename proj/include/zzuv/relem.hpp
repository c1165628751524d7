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

#ifndef ZZUV_RELEM_HPP
#define ZZUV_RELEM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "zzuv/field.hpp"

namespace zzuv {

/// Element a + ub + vc of the local ring Z_p + uZ_p + vZ_p with
/// u^2 = v^2 = uv = vu = 0. Units are exactly the elements with nonzero
/// free part a; the maximal ideal is <u, v>.
class RElem {
   public:
    explicit RElem(PrimeField f) : f_(f), a_(0), b_(0), c_(0) {}
    RElem(PrimeField f, std::int64_t a, std::int64_t b, std::int64_t c)
        : f_(f), a_(f.reduce(a)), b_(f.reduce(b)), c_(f.reduce(c)) {}

    static RElem zero(PrimeField f) { return RElem(f); }
    static RElem one(PrimeField f) { return RElem(f, 1, 0, 0); }
    static RElem u(PrimeField f) { return RElem(f, 0, 1, 0); }
    static RElem v(PrimeField f) { return RElem(f, 0, 0, 1); }
    static RElem from_scalar(PrimeField f, std::int64_t a) { return RElem(f, a, 0, 0); }

    const PrimeField& field() const noexcept { return f_; }
    std::uint32_t a() const noexcept { return a_; }
    std::uint32_t b() const noexcept { return b_; }
    std::uint32_t c() const noexcept { return c_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0; }
    bool is_one() const noexcept { return a_ == 1 && b_ == 0 && c_ == 0; }

    /// rho(a + ub + vc) = a, the reduction mod <u, v>.
    std::uint32_t rho() const noexcept { return a_; }
    /// phi(a + ub + vc) = a + ub, the reduction mod v, as the pair (a, b).
    std::pair<std::uint32_t, std::uint32_t> phi() const noexcept { return {a_, b_}; }

    bool is_unit() const noexcept { return a_ != 0; }

    /// Closed-form inverse (a + ub + vc)^-1 = a^-1 - u a^-2 b - v a^-2 c;
    /// throws for non-units.
    RElem inverse() const {
        if (!is_unit()) throw std::invalid_argument("inverse of non-unit ring element");
        const std::uint32_t ai = f_.inv(a_);
        const std::uint32_t ai2 = f_.mul(ai, ai);
        return RElem(f_, ai, f_.neg(f_.mul(ai2, b_)), f_.neg(f_.mul(ai2, c_)));
    }

    RElem operator+(const RElem& r) const {
        return RElem(f_, f_.add(a_, r.a_), f_.add(b_, r.b_), f_.add(c_, r.c_));
    }
    RElem operator-(const RElem& r) const {
        return RElem(f_, f_.sub(a_, r.a_), f_.sub(b_, r.b_), f_.sub(c_, r.c_));
    }
    RElem operator-() const { return RElem(f_, f_.neg(a_), f_.neg(b_), f_.neg(c_)); }
    RElem operator*(const RElem& r) const {
        // (a1 + u b1 + v c1)(a2 + u b2 + v c2) with all nilpotent products zero
        return RElem(f_, f_.mul(a_, r.a_),
                     f_.add(f_.mul(a_, r.b_), f_.mul(b_, r.a_)),
                     f_.add(f_.mul(a_, r.c_), f_.mul(c_, r.a_)));
    }

    RElem pow(std::uint64_t e) const {
        RElem r = one(f_), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const RElem& r) const noexcept {
        return f_ == r.f_ && a_ == r.a_ && b_ == r.b_ && c_ == r.c_;
    }

    std::string str() const {
        std::string s = std::to_string(a_);
        if (b_) s += "+" + std::to_string(b_) + "u";
        if (c_) s += "+" + std::to_string(c_) + "v";
        return s;
    }

   private:
    PrimeField f_;
    std::uint32_t a_, b_, c_;

    RElem(PrimeField f, std::uint32_t a, std::uint32_t b, std::uint32_t c, int)
        : f_(f), a_(a), b_(b), c_(c) {}
};

}  // namespace zzuv

#endif
