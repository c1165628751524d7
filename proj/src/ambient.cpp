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

#include "zzuv/ambient.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzuv {

CodeParams::CodeParams(PrimeField f, std::uint32_t a, std::uint32_t b, RElem l)
    : field(f), alpha(a), beta(b), lambda(l) {
    if (beta == 0) throw std::invalid_argument("beta must be >= 1");
    if (!(lambda.field() == field)) throw std::invalid_argument("lambda field mismatch");
    if (lambda.rho() != 1)
        throw std::invalid_argument("lambda must be a unit with free part 1");
}

PairWord::PairWord(CodeParams prm, const FpPoly& left, const RPoly& right)
    : prm_(std::move(prm)),
      left_(prm_.alpha > 0 ? left.mod_xn_minus_1(prm_.alpha) : left),
      right_(rpoly_mod(right, prm_.beta, prm_.lambda)) {
    if (prm_.alpha == 0 && !left_.is_zero())
        throw std::invalid_argument("left block must be empty when alpha = 0");
}

PairWord PairWord::zero(const CodeParams& prm) {
    return PairWord(prm, FpPoly::zero(prm.field), RPoly::zero(prm.field));
}

std::vector<std::uint32_t> PairWord::left_symbols() const {
    std::vector<std::uint32_t> out(prm_.alpha, 0);
    for (std::size_t i = 0; i < left_.coeffs().size(); ++i) out[i] = left_.coeffs()[i];
    return out;
}

std::vector<RElem> PairWord::right_coeffs() const {
    std::vector<RElem> out(prm_.beta, RElem::zero(prm_.field));
    for (std::size_t i = 0; i < right_.coeffs().size(); ++i) out[i] = right_.coeffs()[i];
    return out;
}

PairWord PairWord::operator+(const PairWord& rhs) const {
    if (!(prm_ == rhs.prm_)) throw std::invalid_argument("parameter mismatch");
    return PairWord(prm_, left_ + rhs.left_, right_ + rhs.right_);
}

PairWord PairWord::operator-(const PairWord& rhs) const {
    if (!(prm_ == rhs.prm_)) throw std::invalid_argument("parameter mismatch");
    return PairWord(prm_, left_ - rhs.left_, right_ - rhs.right_);
}

PackedWord PairWord::packed() const {
    const std::uint32_t a = prm_.alpha, b = prm_.beta;
    PackedWord w(prm_.word_len(), 0);
    for (std::size_t i = 0; i < left_.coeffs().size(); ++i)
        w[i] = static_cast<kernels::sym>(left_.coeffs()[i]);
    for (std::size_t i = 0; i < right_.coeffs().size(); ++i) {
        const RElem& e = right_.coeffs()[i];
        w[a + i] = static_cast<kernels::sym>(e.a());
        w[a + b + i] = static_cast<kernels::sym>(e.b());
        w[a + 2 * b + i] = static_cast<kernels::sym>(e.c());
    }
    return w;
}

PairWord PairWord::from_packed(const CodeParams& prm, const PackedWord& w) {
    if (w.size() != prm.word_len()) throw std::invalid_argument("packed length mismatch");
    const std::uint32_t a = prm.alpha, b = prm.beta;
    std::vector<std::int64_t> left(w.begin(), w.begin() + a);
    std::vector<RElem> right;
    right.reserve(b);
    for (std::uint32_t i = 0; i < b; ++i)
        right.emplace_back(prm.field, w[a + i], w[a + b + i], w[a + 2 * b + i]);
    return PairWord(prm, FpPoly(prm.field, std::move(left)), RPoly(prm.field, std::move(right)));
}

PairWord star_mul(const RPoly& scalar, const PairWord& z) {
    const CodeParams& prm = z.params();
    FpPoly left = scalar.rho() * z.left();
    if (prm.alpha > 0) left = left.mod_xn_minus_1(prm.alpha);
    RPoly right = rpoly_mul_mod(scalar, z.right(), prm.beta, prm.lambda);
    return PairWord(prm, left, right);
}

PairWord star_mul(const RElem& scalar, const PairWord& z) {
    return star_mul(RPoly::constant(scalar), z);
}

namespace {

PairWord rotate(const PairWord& z, const RElem& wrap) {
    const CodeParams& prm = z.params();
    std::vector<std::uint32_t> l = z.left_symbols();
    if (prm.alpha > 1) std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
    std::vector<RElem> r = z.right_coeffs();
    std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
    r[0] = r[0] * wrap;
    std::vector<std::int64_t> li(l.begin(), l.end());
    return PairWord(prm, FpPoly(prm.field, std::move(li)), RPoly(prm.field, std::move(r)));
}

}  // namespace

PairWord tau(const PairWord& z) { return rotate(z, RElem::one(z.params().field)); }

PairWord tau_lambda(const PairWord& z) { return rotate(z, z.params().lambda); }

RElem inner_product(const PairWord& z1, const PairWord& z2) {
    if (!(z1.params() == z2.params())) throw std::invalid_argument("parameter mismatch");
    const PrimeField f = z1.params().field;
    std::uint32_t left_dot = 0;
    {
        const auto a = z1.left_symbols(), b = z2.left_symbols();
        for (std::size_t i = 0; i < a.size(); ++i) left_dot = f.add(left_dot, f.mul(a[i], b[i]));
    }
    RElem acc(f, 0, left_dot, left_dot);  // (u+v) * sum c_i e_i
    const auto d = z1.right_coeffs(), e = z2.right_coeffs();
    for (std::size_t i = 0; i < d.size(); ++i) acc = acc + d[i] * e[i];
    return acc;
}

std::vector<kernels::sym> gray_psi(const PairWord& z) {
    PackedWord out;
    packed::gray(z.params(), z.packed(), out);
    return out;
}

namespace packed {

void add(const CodeParams& prm, const PackedWord& a, const PackedWord& b, PackedWord& out) {
    out.resize(a.size());
    kernels::add_mod(out.data(), a.data(), b.data(), a.size(),
                     static_cast<kernels::sym>(prm.p()));
}

void tau_lambda_impl(const CodeParams& prm, const PackedWord& w, PackedWord& out,
                     const RElem& wrap) {
    const std::uint32_t a = prm.alpha, b = prm.beta, p = prm.p();
    out.resize(w.size());
    if (a > 0) {
        out[0] = w[a - 1];
        for (std::uint32_t i = 1; i < a; ++i) out[i] = w[i - 1];
    }
    for (std::uint32_t pl = 0; pl < 3; ++pl) {
        const std::uint32_t base = a + pl * b;
        out[base] = w[base + b - 1];
        for (std::uint32_t i = 1; i < b; ++i) out[base + i] = w[base + i - 1];
    }
    // wrapped beta-coefficient times wrap = (a, b + l2 a, c + l3 a)
    const std::uint32_t wa = out[a], wb = out[a + b], wc = out[a + 2 * b];
    out[a + b] = static_cast<kernels::sym>((wb + wrap.b() * wa) % p);
    out[a + 2 * b] = static_cast<kernels::sym>((wc + wrap.c() * wa) % p);
}

void tau_lambda(const CodeParams& prm, const PackedWord& w, PackedWord& out) {
    tau_lambda_impl(prm, w, out, prm.lambda);
}

void tau_plain(const CodeParams& prm, const PackedWord& w, PackedWord& out) {
    tau_lambda_impl(prm, w, out, RElem::one(prm.field));
}

void star_u(const CodeParams& prm, const PackedWord& w, PackedWord& out) {
    const std::uint32_t a = prm.alpha, b = prm.beta;
    out.assign(w.size(), 0);
    // u * (a + ub + vc) = u a; left block killed by rho(u) = 0
    for (std::uint32_t i = 0; i < b; ++i) out[a + b + i] = w[a + i];
}

void star_v(const CodeParams& prm, const PackedWord& w, PackedWord& out) {
    const std::uint32_t a = prm.alpha, b = prm.beta;
    out.assign(w.size(), 0);
    for (std::uint32_t i = 0; i < b; ++i) out[a + 2 * b + i] = w[a + i];
}

void scale(const CodeParams& prm, const PackedWord& w, std::uint32_t c, PackedWord& out) {
    out.resize(w.size());
    kernels::scale_mod(out.data(), w.data(), static_cast<kernels::sym>(c % prm.p()), w.size(),
                       static_cast<kernels::sym>(prm.p()));
}

RElem inner(const CodeParams& prm, const kernels::sym* x, const kernels::sym* y) {
    const std::uint32_t a = prm.alpha, b = prm.beta;
    const kernels::sym p = static_cast<kernels::sym>(prm.p());
    const kernels::sym* xa = x + a;
    const kernels::sym* xb = x + a + b;
    const kernels::sym* xc = x + a + 2 * b;
    const kernels::sym* ya = y + a;
    const kernels::sym* yb = y + a + b;
    const kernels::sym* yc = y + a + 2 * b;
    const std::uint32_t left = kernels::dot_mod(x, y, a, p);
    const std::uint32_t free_part = kernels::dot_mod(xa, ya, b, p);
    const std::uint32_t u_part = prm.field.add(
        left, prm.field.add(kernels::dot_mod(xa, yb, b, p), kernels::dot_mod(xb, ya, b, p)));
    const std::uint32_t v_part = prm.field.add(
        left, prm.field.add(kernels::dot_mod(xa, yc, b, p), kernels::dot_mod(xc, ya, b, p)));
    return RElem(prm.field, free_part, u_part, v_part);
}

RElem inner(const CodeParams& prm, const PackedWord& a, const PackedWord& b) {
    return inner(prm, a.data(), b.data());
}

void gray(const CodeParams& prm, const PackedWord& w, PackedWord& out) {
    const std::uint32_t a = prm.alpha, b = prm.beta;
    const kernels::sym p = static_cast<kernels::sym>(prm.p());
    out.resize(prm.gray_len());
    std::copy(w.begin(), w.begin() + a + b, out.begin());  // left block and a-plane
    kernels::add_mod(out.data() + a + b, w.data() + a, w.data() + a + b, b, p);      // a + b
    kernels::add_mod(out.data() + a + 2 * b, w.data() + a, w.data() + a + 2 * b, b, p);  // a + c
}

std::size_t weight_mixed(const CodeParams& prm, const PackedWord& w) {
    const std::uint32_t a = prm.alpha, b = prm.beta;
    std::size_t wt = kernels::count_nonzero(w.data(), a);
    for (std::uint32_t i = 0; i < b; ++i)
        wt += (w[a + i] | w[a + b + i] | w[a + 2 * b + i]) != 0;
    return wt;
}

}  // namespace packed

}  // namespace zzuv
