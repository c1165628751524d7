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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "zzuv/oracle.hpp"

using namespace zzuv;

namespace {

CodeSpec load_spec(const char* name) {
    std::ifstream in(std::string(ZZUV_SPEC_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return CodeSpec::from_json(j);
}

CodeParams cyc(std::uint32_t p, std::uint32_t alpha, std::uint32_t beta) {
    PrimeField f(p);
    return CodeParams(f, alpha, beta, RElem::one(f));
}

}  // namespace

TEST_CASE("closure of the empty generator list is the zero code") {
    auto prm = cyc(3, 2, 2);
    const CodewordSet set = span_closure({}, prm, 10);
    CHECK(set.size() == 1);
    CHECK(set.contains(PackedWord(prm.word_len(), 0)));
}

TEST_CASE("closure of a v-torsion generator at beta = 1") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        CodeParams prm(f, 0, 1, RElem::one(f));
        PairWord gen(prm, FpPoly::zero(f), RPoly::constant(RElem::v(f)));
        const CodewordSet set = span_closure({gen}, prm, 100);
        CHECK(set.size() == p);  // {c v : c in Z_p}
        for (std::uint32_t c = 0; c < p; ++c)
            CHECK(set.contains(PackedWord{0, 0, static_cast<kernels::sym>(c)}));
    }
}

TEST_CASE("closure of (0|u) at p=2, beta=2 is the u-plane") {
    PrimeField f2(2);
    CodeParams prm(f2, 0, 2, RElem::one(f2));
    PairWord gen(prm, FpPoly::zero(f2), RPoly::constant(RElem::u(f2)));
    const CodewordSet set = span_closure({gen}, prm, 100);
    CHECK(set.size() == 4);
    CHECK(min_distance(set, DistanceMetric::GrayHamming) == 1);
    CHECK(min_distance(set, DistanceMetric::HammingMixed) == 1);
}

TEST_CASE("constacyclic reference spec: oracle cardinality versus the claim") {
    const CodeSpec s = load_spec("consta_p3_a4_b2.json");
    const CodewordSet set = span_closure(s.generators(), s.prm, 100000);
    // The tuple's claimed exponent is 10 (the full ambient); the projection
    // kernel argument gives |ker| = 3^4 (the kernel ideal collapses to <1>)
    // and |image| = 3 * 3^4, hence 3^9 in truth.
    CHECK(set.size() == 19683);
    CHECK(set.exponent() == 9);
    CHECK(claimed_exponent(s) == 10);
    for (ClosureOp op : {ClosureOp::TauLambda, ClosureOp::StarU, ClosureOp::StarV,
                         ClosureOp::StarX, ClosureOp::StarResidues, ClosureOp::Addition})
        CHECK(check_closed_under(set, op));
    for (const PairWord& g : s.generators()) CHECK(set.contains(g.packed()));

    // every encoded word lands in the closure
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(0, 2);
    const SpanningSet span = build_span(s);
    for (int trial = 0; trial < 50; ++trial) {
        MessageTuple m(s.prm.field);
        m.s[1] = RPoly::embed(FpPoly(s.prm.field, {coef(rng), coef(rng)}));
        m.s[2] = RPoly(s.prm.field, {RElem(s.prm.field, coef(rng), coef(rng), coef(rng))});
        m.s[3] = RPoly(s.prm.field, {RElem(s.prm.field, coef(rng), coef(rng), coef(rng))});
        m.s[4] = RPoly::embed(FpPoly(s.prm.field, {coef(rng), coef(rng)}));
        CHECK(set.contains(encode(s, m).packed()));
    }
}

TEST_CASE("closure checks reject sets that are not closed") {
    auto prm = cyc(3, 2, 1);
    PackedWord zero(prm.word_len(), 0);
    PackedWord impulse = zero;
    impulse[0] = 1;
    const CodewordSet set = CodewordSet::from_words(prm, {zero, impulse}, 100);
    CHECK_FALSE(check_closed_under(set, ClosureOp::Tau));
    CHECK_FALSE(check_closed_under(set, ClosureOp::Addition));  // 1+1 = 2 missing
}

TEST_CASE("addition check agrees between the pairwise and the rank route") {
    // a genuine subgroup of 4096 = 2^12 words exercises the rank route
    PrimeField f2(2);
    CodeParams prm(f2, 0, 4, RElem::one(f2));
    CodeSpec s(prm, CodeKind::RingCyclicSimple);
    s.g = RPoly::one(f2);
    const CodewordSet all = span_closure(s.generators(), prm, 1 << 14);
    CHECK(all.size() == 4096);
    CHECK(check_closed_under(all, ClosureOp::Addition));

    // dropping one nonzero word breaks closure; 4095 is not a 2-power
    std::vector<PackedWord> words;
    for (std::uint64_t i = 0; i + 1 < all.size(); ++i) words.push_back(all.word_copy(i));
    const CodewordSet broken = CodewordSet::from_words(prm, std::move(words), 1 << 14);
    CHECK_FALSE(check_closed_under(broken, ClosureOp::Addition));
}

TEST_CASE("independence audit flags a duplicated generator") {
    PrimeField f2(2);
    CodeParams prm(f2, 2, 2, RElem::one(f2));
    PairWord w(prm, FpPoly(f2, {1, 1}), RPoly::embed(FpPoly(f2, {1, 1})));
    SpanningSet span{prm, CodeKind::AdditiveCyclicSimple, {}, {}};
    span.elements.push_back({w, SpanBlock::S2, 0});
    span.elements.push_back({w, SpanBlock::S2, 1});  // duplicate
    span.block_sizes[2] = 2;
    const IndependenceReport rep = independence_audit(span, std::nullopt, 1000);
    REQUIRE(rep.dependent.size() == 2);
    CHECK_FALSE(rep.dependent[0]);
    CHECK(rep.dependent[1]);
    CHECK(rep.first_dependent == 1);
}

TEST_CASE("independence audit on a one-generator simple span") {
    PrimeField f2(2);
    CodeParams prm(f2, 2, 2, RElem::one(f2));
    CodeSpec s(prm, CodeKind::AdditiveCyclicSimple);
    s.f1 = FpPoly::x_pow_n_minus_1(f2, 2);
    s.f2 = FpPoly::one(f2);
    s.g = RPoly::embed(FpPoly(f2, {1, 1}));
    const SpanningSet span = build_span(s);
    REQUIRE(span.elements.size() == 1);
    const IndependenceReport rep = independence_audit(span, claimed_block_exponents(s), 1000);
    CHECK(rep.all_independent());
    CHECK(rep.measured_block_exponents[2] == 3);  // full R-coefficient freedom
    REQUIRE(rep.claimed.has_value());
    CHECK((*rep.claimed)[2] == 3);
}

TEST_CASE("the torsion blocks cannot contribute p^3 per element") {
    // S3-type elements (h f2, u h p1 + v h p2) are killed by u and v, so
    // their measured contribution is at most p per element where the
    // counting argument charges p^3: the root of the cardinality formulas
    // exceeding the ambient bound.
    const CodeSpec s = load_spec("full_p2_a6_b8.json");
    const SpanningSet span = build_span(s);
    const IndependenceReport rep =
        independence_audit(span, claimed_block_exponents(s), 1u << 22);
    REQUIRE(rep.claimed.has_value());
    CHECK((*rep.claimed)[1] == 3);
    CHECK((*rep.claimed)[2] == 12);
    CHECK((*rep.claimed)[3] == 12);
    CHECK((*rep.claimed)[4] == 18);
    CHECK(rep.measured_block_exponents[1] == 3);   // matches
    CHECK(rep.measured_block_exponents[2] == 12);  // matches
    CHECK(rep.measured_block_exponents[3] == 1);   // torsion-limited
    CHECK(rep.measured_block_exponents[4] == 4);
    CHECK(rep.measured_block_exponents[5] == 0);
    CHECK(rep.measured_block_exponents[6] == 1);
    CHECK(rep.total_exponent == 21);  // the true size, well under the claim of 58

    // the listed elements span exactly the module the generators generate
    const CodewordSet closure = span_closure(s.generators(), s.prm, 1u << 22);
    CHECK(closure.size() == rep.closure_size);
    CHECK(closure.exponent() == 21);
}

TEST_CASE("dual of the zero code is the full ambient, and back") {
    auto prm = cyc(2, 1, 1);
    PackedWord zero(prm.word_len(), 0);
    const CodewordSet trivial = CodewordSet::from_words(prm, {zero}, 100);
    const CodewordSet dual = dual_code(trivial, 100);
    CHECK(dual.size() == 16);  // p^(alpha+3beta) = 2^4
    const CodewordSet dd = dual_code(dual, 100);
    CHECK(dd.size() == 1);  // only 0 is orthogonal to everything
}

TEST_CASE("duals of shift-closed closures are shift-closed") {
    PrimeField f2(2);
    CodeParams prm(f2, 2, 2, RElem::one(f2));
    CodeSpec s(prm, CodeKind::AdditiveCyclicSimple);
    s.f1 = FpPoly(f2, {1, 1});
    s.f2 = FpPoly::one(f2);
    s.g = RPoly::embed(FpPoly(f2, {1, 1}));
    const CodewordSet set = span_closure(s.generators(), prm, 1 << 10);
    const CodewordSet dual = dual_code(set, 1 << 10);  // asserts tau-closure internally
    CHECK(check_closed_under(dual, ClosureOp::Tau));
    // containment in the double dual
    const CodewordSet dd = dual_code(dual, 1 << 10);
    for (std::uint64_t i = 0; i < set.size(); ++i) CHECK(dd.contains(set.word_copy(i)));
}

TEST_CASE("minimum distance basics") {
    auto prm = cyc(3, 2, 1);
    // full ambient has distance 1
    CodeSpec s(prm, CodeKind::AdditiveCyclicSimple);  // unused; build directly
    std::vector<PackedWord> all;
    PackedWord w(prm.word_len(), 0);
    const std::uint64_t total = 3 * 3 * 3 * 3 * 3;
    for (std::uint64_t i = 0; i < total; ++i) {
        all.push_back(w);
        for (std::size_t j = w.size(); j-- > 0;) {
            if (++w[j] < 3) break;
            w[j] = 0;
        }
    }
    const CodewordSet full = CodewordSet::from_words(prm, std::move(all), 1 << 10);
    CHECK(min_distance(full, DistanceMetric::HammingMixed) == 1);

    // {0, all-ones on the left} has mixed weight alpha
    PackedWord ones(prm.word_len(), 0);
    ones[0] = ones[1] = 1;
    const CodewordSet rep =
        CodewordSet::from_words(prm, {PackedWord(prm.word_len(), 0), ones}, 10);
    CHECK(min_distance(rep, DistanceMetric::HammingMixed) == 2);

    const CodewordSet zero =
        CodewordSet::from_words(prm, {PackedWord(prm.word_len(), 0)}, 10);
    CHECK_THROWS_WITH_AS(min_distance(zero, DistanceMetric::GrayHamming),
                         "no nonzero codeword", std::invalid_argument);
}

TEST_CASE("gray images of closures are quasi-cyclic in the stated sense") {
    // alpha = beta: QC of length 4 alpha and index 4
    {
        PrimeField f2(2);
        CodeParams prm(f2, 2, 2, RElem::one(f2));
        CodeSpec s(prm, CodeKind::AdditiveCyclicSimple);
        s.f1 = FpPoly(f2, {1, 1});
        s.f2 = FpPoly::one(f2);
        s.g = RPoly::embed(FpPoly(f2, {1, 1}));
        s.p1 = FpPoly::one(f2);
        const CodewordSet set = span_closure(s.generators(), prm, 1 << 10);
        CHECK(qc_image_check(set) == QcClass::Qc4AlphaIndex4);
    }
    // alpha != beta: generalized QC
    {
        const CodeSpec s = load_spec("consta_p3_a4_b2.json");
        const CodewordSet set = span_closure(s.generators(), s.prm, 100000);
        CHECK(qc_image_check(set) == QcClass::GeneralizedQc);
    }
    // a random non-closed set is neither
    {
        auto prm = cyc(3, 2, 2);
        PackedWord v(prm.word_len(), 0);
        v[0] = 1;
        v[3] = 2;
        const CodewordSet set =
            CodewordSet::from_words(prm, {PackedWord(prm.word_len(), 0), v}, 10);
        CHECK(qc_image_check(set) == QcClass::Neither);
    }
}

TEST_CASE("separability equivalence in both directions at p=3, alpha=beta=2") {
    PrimeField f3(3);
    CodeParams prm(f3, 2, 2, RElem(f3, 1, 1, 0));

    // C_alpha = <x+1> mod x^2-1 (cyclic), C_beta = v-plane (lambda-closed)
    std::vector<std::vector<kernels::sym>> ca = {{0, 0}, {1, 1}, {2, 2}};
    std::vector<PackedWord> cb;
    for (std::uint32_t c0 = 0; c0 < 3; ++c0)
        for (std::uint32_t c1 = 0; c1 < 3; ++c1)
            cb.push_back({0, 0, 0, 0, static_cast<kernels::sym>(c0),
                          static_cast<kernels::sym>(c1)});
    SeparabilityReport rep = separability_check(prm, ca, cb, 1000);
    CHECK(rep.alpha_cyclic);
    CHECK(rep.beta_constacyclic);
    CHECK(rep.product_closed);
    CHECK(rep.equivalence_holds);

    // break the alpha factor: {00, 10} is not shift-closed
    std::vector<std::vector<kernels::sym>> bad = {{0, 0}, {1, 0}};
    rep = separability_check(prm, bad, cb, 1000);
    CHECK_FALSE(rep.alpha_cyclic);
    CHECK_FALSE(rep.product_closed);
    CHECK(rep.equivalence_holds);
}

TEST_CASE("product basics") {
    auto prm = cyc(2, 1, 1);
    const CodewordSet zz = product_spec(prm, {{0}}, {{0, 0, 0}}, 10);
    CHECK(zz.size() == 1);
    CHECK_THROWS_AS(product_spec(prm, std::vector<std::vector<kernels::sym>>(5, {0}),
                                 std::vector<PackedWord>(5, {0, 0, 0}), 10),
                    GuardOverflow);

    // full x full is the full ambient
    std::vector<std::vector<kernels::sym>> ca = {{0}, {1}};
    std::vector<PackedWord> cb;
    for (kernels::sym a = 0; a < 2; ++a)
        for (kernels::sym b = 0; b < 2; ++b)
            for (kernels::sym c = 0; c < 2; ++c) cb.push_back({a, b, c});
    const CodewordSet full = product_spec(prm, ca, cb, 100);
    CHECK(full.size() == 16);
    CHECK(check_closed_under(full, ClosureOp::TauLambda));
}

TEST_CASE("guard overflow carries a partial lower bound") {
    PrimeField f2(2);
    CodeParams prm(f2, 4, 4, RElem::one(f2));
    CodeSpec s(prm, CodeKind::AdditiveCyclicSimple);
    s.f1 = FpPoly::one(f2);  // kernel part alone spans 2^4 words
    s.f2 = FpPoly::one(f2);
    s.g = RPoly::embed(FpPoly(f2, {1, 1}));
    try {
        span_closure(s.generators(), prm, 8);
        FAIL("expected GuardOverflow");
    } catch (const GuardOverflow& e) {
        CHECK(e.partial_lower_bound() >= 8);
        CHECK(std::string(e.what()) == "closure exceeds guard");
    }
}

TEST_CASE("closure dump is sorted, stable, and parseable") {
    PrimeField f2(2);
    CodeParams prm(f2, 0, 1, RElem::one(f2));
    PairWord gen(prm, FpPoly::zero(f2), RPoly::constant(RElem::u(f2)));
    const CodewordSet set = span_closure({gen}, prm, 10);
    std::ostringstream os;
    set.dump(os);
    CHECK(os.str() == "0 0 0\n0 1 0\n");
}
