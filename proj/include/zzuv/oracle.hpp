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

#ifndef ZZUV_ORACLE_HPP
#define ZZUV_ORACLE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zzuv/builder.hpp"

namespace zzuv {

/// Thrown when an enumeration would exceed its guard; carries the number
/// of words materialized so far (a lower bound on the true size).
class GuardOverflow : public std::runtime_error {
   public:
    explicit GuardOverflow(std::uint64_t partial)
        : std::runtime_error("closure exceeds guard"), partial_(partial) {}
    std::uint64_t partial_lower_bound() const noexcept { return partial_; }

   private:
    std::uint64_t partial_;
};

/// An explicit, deduplicated set of ambient codewords in canonical packed
/// form (planar symbol layout), sorted lexicographically. This is the
/// ground-truth object every paper claim is audited against.
class CodewordSet {
   public:
    static CodewordSet from_words(const CodeParams& prm, std::vector<PackedWord> words,
                                  std::uint64_t guard);

    const CodeParams& params() const noexcept { return prm_; }
    std::uint64_t guard() const noexcept { return guard_; }
    std::size_t word_len() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }
    const kernels::sym* word(std::uint64_t i) const noexcept { return flat_.data() + i * n_; }
    PackedWord word_copy(std::uint64_t i) const;
    bool contains(const PackedWord& w) const noexcept;

    /// log_p of the size when the size is an exact power of p.
    std::optional<std::int64_t> exponent() const noexcept;

    /// One word per line, symbols as space-separated decimals, sorted;
    /// byte-identical across runs.
    void dump(std::ostream& os) const;

    /// Internal factory; `sorted` must already be deduplicated and in
    /// lexicographic order, `count` words of the params' word length.
    static CodewordSet from_sorted(CodeParams prm, std::size_t n, std::uint64_t guard,
                                   std::uint64_t count, std::vector<kernels::sym> sorted);

   private:
    CodewordSet(CodeParams prm, std::size_t n, std::uint64_t guard)
        : prm_(std::move(prm)), n_(n), guard_(guard) {}

    CodeParams prm_;
    std::size_t n_;
    std::uint64_t guard_ = 0;
    std::uint64_t size_ = 0;
    std::vector<kernels::sym> flat_;
};

/// The least subset of the ambient module containing 0 and the generators
/// that is closed under addition and under star-multiplication by the
/// scalars {x, u, v, field residues} - the submodule the tuple generates.
/// Fixed-point enumeration with deterministic order; the result is
/// self-tested against every closure operation before it is returned.
/// Throws GuardOverflow past `guard` words.
CodewordSet span_closure(const std::vector<PairWord>& generators, const CodeParams& prm,
                         std::uint64_t guard);

enum class ClosureOp { Tau, TauLambda, StarU, StarV, StarX, StarResidues, Addition };

const char* closure_op_name(ClosureOp op) noexcept;

/// True iff `op` maps the set into itself. StarX routes through the
/// polynomial multiplication picture while TauLambda rotates coefficients
/// directly; the two are kept separate on purpose and must agree.
/// The Addition check is exact: pairwise sums for small sets, and the
/// equivalent subspace criterion |S| = p^rank(S) beyond that (in an
/// elementary abelian p-group a finite set is closed under addition iff it
/// is a subgroup iff it is an F_p-subspace).
bool check_closed_under(const CodewordSet& set, ClosureOp op);

struct IndependenceReport {
    std::vector<bool> dependent;          // per span element, in order
    std::optional<std::size_t> first_dependent;
    std::array<std::int64_t, 7> measured_block_exponents{};  // -1 where absent
    std::optional<std::array<std::int64_t, 7>> claimed;
    std::int64_t total_exponent = 0;      // log_p of the span of the listed elements
    std::uint64_t closure_size = 0;       // size of that span

    bool all_independent() const noexcept { return !first_dependent.has_value(); }
    nlohmann::json to_json() const;
};

/// Walks the spanning set in order, asking for each element whether it
/// already lies in the span of its predecessors, and compares the measured
/// per-block growth against the counting argument's claimed contributions.
/// The span here is the additive closure under the coefficient scalars
/// {residues, u, v} but not the shift: shifted multiples are themselves
/// listed elements, and the counting argument charges one coefficient per
/// listed element. Elements whose scalar multiples are all torsion can
/// therefore contribute at most p, which is exactly the discrepancy the
/// audit exists to expose.
IndependenceReport independence_audit(const SpanningSet& span,
                                      const std::optional<std::array<std::int64_t, 7>>& claimed,
                                      std::uint64_t guard);

/// All ambient words with zero inner product against every member; a full
/// scan of the p^(alpha+3 beta) ambient, so that count must fit the guard.
/// When the input is shift-closed the dual is verified to be shift-closed
/// too and a std::logic_error is raised if not.
CodewordSet dual_code(const CodewordSet& set, std::uint64_t guard);

enum class DistanceMetric { HammingMixed, GrayHamming };

/// Exhaustive minimum weight over the nonzero words. Throws
/// std::invalid_argument("no nonzero codeword") on {0}.
std::uint64_t min_distance(const CodewordSet& set, DistanceMetric metric);

enum class QcClass { Qc4AlphaIndex4, GeneralizedQc, Neither };

const char* qc_class_name(QcClass c) noexcept;

/// Applies the Gray map to every word and tests closure under the
/// simultaneous rotation of the four image blocks (alpha, beta, beta,
/// beta). Closed images classify as QC of length 4*alpha and index 4 when
/// alpha = beta, generalized QC of block length (alpha, 3*beta) otherwise.
QcClass qc_image_check(const CodewordSet& set);

/// Explicit Cartesian product C_alpha x C_beta as ambient words.
/// alpha-words are plain residue vectors; beta-words are packed planar
/// triples of length 3*beta.
CodewordSet product_spec(const CodeParams& prm,
                         const std::vector<std::vector<kernels::sym>>& alpha_words,
                         const std::vector<PackedWord>& beta_words, std::uint64_t guard);

struct SeparabilityReport {
    bool alpha_cyclic;        // C_alpha closed under the cyclic shift
    bool beta_constacyclic;   // C_beta closed under the lambda-twisted shift
    bool product_closed;      // C_alpha x C_beta closed under tau_lambda
    bool equivalence_holds;   // product_closed == (alpha_cyclic && beta_constacyclic)
    std::uint64_t product_size;

    nlohmann::json to_json() const;
};

/// Verifies, on the given instance, both directions of the separability
/// equivalence: the product is tau_lambda-closed iff C_alpha is cyclic and
/// C_beta is lambda-constacyclic.
SeparabilityReport separability_check(const CodeParams& prm,
                                      const std::vector<std::vector<kernels::sym>>& alpha_words,
                                      const std::vector<PackedWord>& beta_words,
                                      std::uint64_t guard);

}  // namespace zzuv

#endif
