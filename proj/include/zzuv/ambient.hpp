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

#ifndef ZZUV_AMBIENT_HPP
#define ZZUV_AMBIENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zzuv/kernels.hpp"
#include "zzuv/rpoly.hpp"

namespace zzuv {

/// Parameters of the ambient module
///   Z_p[x]/<x^alpha - 1>  x  R[x]/<x^beta - lambda>.
/// lambda must be a unit with free part exactly 1 (lambda = 1 gives the
/// cyclic quotient). alpha = 0 is the pure ring-code case with an empty
/// left block.
struct CodeParams {
    CodeParams(PrimeField f, std::uint32_t alpha, std::uint32_t beta, RElem lambda);

    PrimeField field;
    std::uint32_t alpha;
    std::uint32_t beta;
    RElem lambda;

    std::uint32_t p() const noexcept { return field.p(); }
    bool cyclic() const noexcept { return lambda.is_one(); }
    /// Number of symbols in the packed form: alpha + 3*beta.
    std::uint32_t word_len() const noexcept { return alpha + 3 * beta; }
    /// Length of the Gray image: alpha + 3*beta.
    std::uint32_t gray_len() const noexcept { return alpha + 3 * beta; }

    bool operator==(const CodeParams&) const noexcept = default;
};

/// Flat symbol vector of length alpha + 3*beta in planar layout:
/// [left block | free plane | u plane | v plane]. This is the canonical
/// packed form used by the enumeration engine and word dumps.
using PackedWord = std::vector<kernels::sym>;

/// A codeword (c(x), d(x)) of the ambient module: the single
/// representation behind both the polynomial view and the coefficient
/// vector view.
class PairWord {
   public:
    /// Reduces left mod x^alpha - 1 and right mod x^beta - lambda.
    PairWord(CodeParams prm, const FpPoly& left, const RPoly& right);

    static PairWord zero(const CodeParams& prm);

    const CodeParams& params() const noexcept { return prm_; }
    const FpPoly& left() const noexcept { return left_; }
    const RPoly& right() const noexcept { return right_; }

    /// Coefficient vector views, padded to full block length.
    std::vector<std::uint32_t> left_symbols() const;
    std::vector<RElem> right_coeffs() const;

    PairWord operator+(const PairWord& rhs) const;
    PairWord operator-(const PairWord& rhs) const;
    bool is_zero() const noexcept { return left_.is_zero() && right_.is_zero(); }
    bool operator==(const PairWord& rhs) const noexcept {
        return prm_ == rhs.prm_ && left_ == rhs.left_ && right_ == rhs.right_;
    }

    PackedWord packed() const;
    static PairWord from_packed(const CodeParams& prm, const PackedWord& w);

    std::string str() const { return "(" + left_.str() + " | " + right_.str() + ")"; }

   private:
    CodeParams prm_;
    FpPoly left_;
    RPoly right_;
};

/// The scalar action z * (c, d) = (rho(z) c, z d) of R[x] on the ambient
/// module, extended to polynomial scalars.
PairWord star_mul(const RPoly& scalar, const PairWord& z);
PairWord star_mul(const RElem& scalar, const PairWord& z);

/// Simultaneous right rotation of both blocks (the cyclic shift).
PairWord tau(const PairWord& z);
/// Right rotation with the wrapped beta-symbol multiplied by lambda;
/// equals x * z in the module picture (checked in tests, by design both
/// routes exist).
PairWord tau_lambda(const PairWord& z);

/// R-valued inner product (u+v) sum(c_i e_i) + sum(d_i f_i).
RElem inner_product(const PairWord& z1, const PairWord& z2);

/// Gray image (e, a + ub + vc) -> (e, a, a+b, a+c), blockwise; length
/// alpha + 3*beta.
std::vector<kernels::sym> gray_psi(const PairWord& z);

// Packed-form counterparts used by the enumeration engine. These operate
// directly on the planar layout and are cross-checked against the
// PairWord implementations in the test suite.
namespace packed {

void add(const CodeParams& prm, const PackedWord& a, const PackedWord& b, PackedWord& out);
void tau_lambda(const CodeParams& prm, const PackedWord& w, PackedWord& out);
void tau_plain(const CodeParams& prm, const PackedWord& w, PackedWord& out);
void star_u(const CodeParams& prm, const PackedWord& w, PackedWord& out);
void star_v(const CodeParams& prm, const PackedWord& w, PackedWord& out);
void scale(const CodeParams& prm, const PackedWord& w, std::uint32_t c, PackedWord& out);
RElem inner(const CodeParams& prm, const kernels::sym* a, const kernels::sym* b);
RElem inner(const CodeParams& prm, const PackedWord& a, const PackedWord& b);
void gray(const CodeParams& prm, const PackedWord& w, PackedWord& out);
/// Hamming weight over the alpha + beta mixed positions.
std::size_t weight_mixed(const CodeParams& prm, const PackedWord& w);

}  // namespace packed

}  // namespace zzuv

#endif
