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

#ifndef ZZUV_CODE_SPEC_HPP
#define ZZUV_CODE_SPEC_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "zzuv/ambient.hpp"

namespace zzuv {

/// The generator-tuple shapes handled by the builders. The additive kinds
/// generate submodules of Z_p[x]/<x^alpha-1> x R[x]/<x^beta-lambda>; the
/// ring kinds are codes over R alone (alpha = 0).
enum class CodeKind {
    AdditiveCyclicFull,     // <(f1,0), (f2, g+u p1+v p2), (f3, u a+v p3), (f4, v b)>
    AdditiveCyclicSimple,   // <(f1,0), (f2, g+u p1+v p2)>
    AdditiveCyclicCoprime,  // <(f1,0), (f2, g+u a+v p1), (f3, v b)>, gcd(beta,p)=1
    AdditiveConstacyclic,   // same tuple mod x^(p-1)-lambda
    RingCyclic,             // triple or pair form over R, picked by gcd(beta,p)
    RingCyclicSimple,       // <g+u p1+v p2> with the generator dividing x^beta-1
    RingConstacyclic,       // <g+u a+v p1, v b> mod x^(p-1)-lambda
};

const char* kind_name(CodeKind k) noexcept;
CodeKind kind_from_name(const std::string& s);

/// A generator tuple plus parameters. Slots a kind does not use stay
/// empty (the zero polynomial). g is carried over R because the
/// constacyclic kinds admit generators with nilpotent parts; the cyclic
/// kinds require it to be a plain Z_p polynomial.
struct CodeSpec {
    CodeParams prm;
    CodeKind kind;
    FpPoly f1, f2, f3, f4;
    RPoly g;
    FpPoly a, b, p1, p2, p3;

    explicit CodeSpec(CodeParams params, CodeKind k);

    std::uint32_t p() const noexcept { return prm.p(); }
    std::uint32_t alpha() const noexcept { return prm.alpha; }
    std::uint32_t beta() const noexcept { return prm.beta; }

    bool is_additive_kind() const noexcept;
    bool is_constacyclic_kind() const noexcept;
    /// beta shares a factor with p (decides the ring-cyclic form).
    bool beta_shares_factor_with_p() const noexcept;

    /// The declared generator tuple, as ambient codewords, in theorem order.
    std::vector<PairWord> generators() const;

    /// Composite right-hand generators.
    RPoly right_main() const;       // g+u p1+v p2 (full/simple) or g+u a+v p1
    RPoly right_middle() const;     // u a + v p3 (triple forms)
    RPoly right_vb() const;         // v b

    /// Stable identity string (used as the dedup/sort key in searches).
    std::string key() const;

    nlohmann::json to_json() const;
    static CodeSpec from_json(const nlohmann::json& j);
};

// Polynomial serialization used across all config and report files:
// Z_p polynomials as flat coefficient arrays [c0, c1, ...] (ascending),
// R polynomials as arrays of [a, b, c] triples.
nlohmann::json poly_json(const FpPoly& p);
nlohmann::json poly_json(const RPoly& p);
FpPoly fppoly_from_json(PrimeField f, const nlohmann::json& j, const char* name);
/// Accepts a flat array (Z_p content) or an array of [a, b, c] triples.
RPoly rpoly_from_json(PrimeField f, const nlohmann::json& j, const char* name);
/// {"left": [...], "right": [[a,b,c], ...]}, padded to the block lengths.
nlohmann::json pair_word_json(const PairWord& w);

}  // namespace zzuv

#endif
