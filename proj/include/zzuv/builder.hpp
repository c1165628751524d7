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

#ifndef ZZUV_BUILDER_HPP
#define ZZUV_BUILDER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zzuv/code_spec.hpp"

namespace zzuv {

struct Check {
    std::string name;
    bool pass;
    std::string detail;  // empty when there is nothing to add
};

/// Outcome of checking a generator tuple against its governing theorem.
/// `hypotheses` are the theorem's stated conditions; `consistency` are the
/// necessary conditions the kernel lemmas derive from them, reported
/// separately. `computable` is the narrower question of whether the
/// derived quantities and spanning set can be constructed at all; the
/// builders refuse a spec only on that ground, so that a tuple violating a
/// minimality hypothesis can still be expanded and audited against the
/// enumeration engine.
struct ValidationReport {
    std::vector<Check> hypotheses;
    std::vector<Check> consistency;
    std::vector<std::string> computability_issues;

    bool hypotheses_ok() const noexcept;
    bool consistency_ok() const noexcept;
    bool computable() const noexcept { return computability_issues.empty(); }

    nlohmann::json to_json() const;
};

ValidationReport validate_spec(const CodeSpec& spec);

/// Auxiliary polynomials and degree bookkeeping, per kind. Fields a kind
/// does not define stay empty; degrees not in play stay -1.
///
/// For the constacyclic kinds h = (x^beta - lambda)/g is computed in R[x],
/// while m1 is a gcd over Z_p of the rho-images of its arguments and
/// m2 = (x^beta - 1)/m1 over Z_p. That convention (gcd through rho) is
/// recorded in `rho_gcd_convention` and stamped into every report, because
/// a gcd over R[x] itself is not defined and the exact division of
/// x^beta - lambda by m1 generally has a nilpotent remainder.
struct DerivedQuantities {
    CodeKind kind;
    std::optional<RPoly> h, k;
    std::optional<FpPoly> m1, m2, l1, l2;
    std::array<std::int64_t, 7> t{};  // t[1..6]; -1 where not applicable
    std::int64_t delta = -1, gamma = -1, epsilon = -1;  // ring-kind degrees
    bool corollary_merged = false;  // coprime kind with a == p1
    bool rho_gcd_convention = false;

    nlohmann::json to_json() const;
};

/// Throws std::invalid_argument when the spec is not computable (see
/// ValidationReport::computable).
DerivedQuantities derive_quantities(const CodeSpec& spec);

enum class SpanBlock : std::uint8_t { S1 = 1, S2, S3, S4, S5, S6 };

struct SpanElement {
    PairWord word;
    SpanBlock block;
    std::uint32_t shift;
};

struct SpanningSet {
    CodeParams prm;
    CodeKind kind;
    std::vector<SpanElement> elements;
    std::array<std::uint32_t, 7> block_sizes{};  // [1..6]

    nlohmann::json to_json() const;
};

/// The minimal spanning set the governing theorem lists: each block is the
/// run of x-shifts of one compound generator, with the block ranges the
/// theorem prescribes (empty blocks when a degree sits at its maximum).
SpanningSet build_span(const CodeSpec& spec);

/// The exponent e of the cardinality formula |C| = p^e the source theorem
/// claims, reproduced verbatim with no correction. Kinds without a stated
/// formula (the ring kinds) return nullopt. The claim is audited, not
/// trusted: see ambient_bound_check and the enumeration engine.
std::optional<std::int64_t> claimed_exponent(const CodeSpec& spec);

/// Per-block exponent contributions asserted in the counting argument
/// (base-p logs), in block order 1..6; -1 for absent blocks.
std::optional<std::array<std::int64_t, 7>> claimed_block_exponents(const CodeSpec& spec);

struct AmbientBoundReport {
    std::int64_t exponent;       // claimed e
    std::int64_t bound;          // alpha + 3*beta
    bool consistent;             // e <= bound

    nlohmann::json to_json() const;
};

/// Sanity gate: any additive code has at most p^(alpha + 3 beta) codewords.
AmbientBoundReport ambient_bound_check(const CodeSpec& spec, std::int64_t exponent);

/// Message blocks s1..s6 (index 0 unused). Blocks a kind does not use must
/// be zero; blocks the theorem restricts to Z_p[x] must have no nilpotent
/// parts. Degree bounds are the block ranges of the spanning set.
struct MessageTuple {
    std::array<RPoly, 7> s;

    explicit MessageTuple(PrimeField f)
        : s{RPoly(f), RPoly(f), RPoly(f), RPoly(f), RPoly(f), RPoly(f), RPoly(f)} {}

    nlohmann::json to_json() const;
    static MessageTuple from_json(PrimeField f, const nlohmann::json& j);
};

/// Systematic-by-blocks encoder: sum of s_i * (block generator), reduced in
/// the ambient module. Throws naming the offending block on a degree-bound
/// or coefficient-domain violation. Additive kinds only.
PairWord encode(const CodeSpec& spec, const MessageTuple& msg);

struct MessageBound {
    std::int64_t max_degree;  // -1 means the block admits only the zero message
    bool over_r;              // coefficients may carry u/v parts
};

/// Per message block s1, s2, ...: the degree bound and coefficient domain
/// the encoder enforces.
std::vector<MessageBound> encode_block_bounds(const CodeSpec& spec);

/// The substitution x -> lambda x transported coefficientwise:
/// R[x]/<x^(p-1) - 1>  ->  R[x]/<x^(p-1) - lambda>, c_i -> c_i lambda^i.
/// A ring isomorphism for every unit lambda = 1 + u l2 + v l3; requires
/// p > 2.
RPoly transport_to_constacyclic(const RPoly& s, const RElem& lambda);
RPoly transport_to_cyclic(const RPoly& s, const RElem& lambda);

/// Collapse <g+u p1+v p2, u a+v p3, v b> with g = a = b to the single
/// generator <g+u p1+v p2>, asserting that the generator divides
/// x^beta - 1 in R[x]; throws "collapse hypothesis violated" otherwise.
CodeSpec normalize_collapsed(const CodeSpec& spec);

}  // namespace zzuv

#endif
