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

#include "zzuv/builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace zzuv {

namespace {

FpPoly xb1(const CodeSpec& s) { return FpPoly::x_pow_n_minus_1(s.prm.field, s.beta()); }
FpPoly xa1(const CodeSpec& s) { return FpPoly::x_pow_n_minus_1(s.prm.field, s.alpha()); }
RPoly xbl(const CodeSpec& s) {
    return RPoly::x_pow_n_minus_lambda(s.prm.field, s.beta(), s.prm.lambda);
}

// gcd of up to three polynomials with zero arguments skipped; the last
// argument (x^beta - 1) is never zero.
FpPoly gcd_list(std::initializer_list<FpPoly> polys) {
    const FpPoly* acc = nullptr;
    FpPoly g = FpPoly::zero(polys.begin()->field());
    for (const FpPoly& q : polys) {
        if (q.is_zero()) continue;
        g = acc ? poly_gcd(g, q) : q.monic();
        acc = &g;
    }
    if (!acc) throw std::invalid_argument("gcd of all-zero arguments");
    return g;
}

Check div_check_fp(std::string name, const FpPoly& den, const FpPoly& num) {
    if (den.is_zero()) return {std::move(name), false, "divisor is the zero polynomial"};
    return {std::move(name), divides(den, num), ""};
}

Check div_check_r(std::string name, const RPoly& den, const RPoly& num) {
    if (den.is_zero()) return {std::move(name), false, "divisor is the zero polynomial"};
    try {
        return {std::move(name), rpoly_divides(den, num), ""};
    } catch (const std::invalid_argument& e) {
        return {std::move(name), false, e.what()};
    }
}

// (x^beta - 1)/d for a Z_p divisor d, or nullopt when not exact.
std::optional<FpPoly> exact_quot(const FpPoly& num, const FpPoly& den) {
    if (den.is_zero()) return std::nullopt;
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::optional<RPoly> exact_quot_r(const RPoly& num, const RPoly& den) {
    if (den.is_zero() || !den.leading().is_unit()) return std::nullopt;
    auto [q, r] = rpoly_divmod_leadunit(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// Whether G = g + u p1 + v p2 divides x^beta - 1 in R[x], and the cofactor
// when it does. Writing the cofactor as k + u k1 + v k2 and matching
// components forces k = (x^beta-1)/g, g k1 = -p1 k, g k2 = -p2 k, so
// divisibility reduces to Z_p checks even when the leading coefficient of
// G is nilpotent (where the narrowed unit-leading division cannot run).
std::optional<RPoly> composite_cofactor(const FpPoly& g, const FpPoly& p1, const FpPoly& p2,
                                        const FpPoly& xb1) {
    if (g.is_zero() || !divides(g, xb1)) return std::nullopt;
    const FpPoly h = poly_divmod(xb1, g).first;
    if (!divides(g, p1 * h) || !divides(g, p2 * h)) return std::nullopt;
    const FpPoly q1 = poly_divmod(p1 * h, g).first;
    const FpPoly q2 = poly_divmod(p2 * h, g).first;
    return RPoly::embed(h) - RPoly::u_times(q1) - RPoly::v_times(q2);
}

void check_unused_slots(const CodeSpec& s, std::vector<Check>& out) {
    struct Slot {
        const char* name;
        bool used;
        bool zero;
    };
    const CodeKind k = s.kind;
    const bool triple_ring =
        k == CodeKind::RingCyclic && s.beta_shares_factor_with_p();
    const bool uses_f = s.is_additive_kind();
    const Slot slots[] = {
        {"f1", uses_f, s.f1.is_zero()},
        {"f2", uses_f && k != CodeKind::RingCyclicSimple, s.f2.is_zero()},
        {"f3",
         k == CodeKind::AdditiveCyclicFull || k == CodeKind::AdditiveCyclicCoprime ||
             k == CodeKind::AdditiveConstacyclic,
         s.f3.is_zero()},
        {"f4", k == CodeKind::AdditiveCyclicFull, s.f4.is_zero()},
        {"a",
         k == CodeKind::AdditiveCyclicFull || k == CodeKind::AdditiveCyclicCoprime ||
             k == CodeKind::AdditiveConstacyclic || k == CodeKind::RingCyclic ||
             k == CodeKind::RingConstacyclic,
         s.a.is_zero()},
        {"b",
         k != CodeKind::AdditiveCyclicSimple && k != CodeKind::RingCyclicSimple,
         s.b.is_zero()},
        {"p1", true, s.p1.is_zero()},
        {"p2",
         k == CodeKind::AdditiveCyclicFull || k == CodeKind::AdditiveCyclicSimple ||
             k == CodeKind::RingCyclicSimple || triple_ring,
         s.p2.is_zero()},
        {"p3", k == CodeKind::AdditiveCyclicFull || triple_ring, s.p3.is_zero()},
    };
    std::string offenders;
    for (const Slot& sl : slots)
        if (!sl.used && !sl.zero) offenders += offenders.empty() ? sl.name : std::string(", ") + sl.name;
    out.push_back({"unused slots empty", offenders.empty(),
                   offenders.empty() ? "" : "nonzero unused slots: " + offenders});
}

}  // namespace

bool ValidationReport::hypotheses_ok() const noexcept {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Check& c) { return c.pass; });
}

bool ValidationReport::consistency_ok() const noexcept {
    return std::all_of(consistency.begin(), consistency.end(),
                       [](const Check& c) { return c.pass; });
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json j;
    auto dump = [](const std::vector<Check>& cs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Check& c : cs) {
            nlohmann::json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.detail.empty()) e["detail"] = c.detail;
            arr.push_back(e);
        }
        return arr;
    };
    j["hypotheses"] = dump(hypotheses);
    j["consistency"] = dump(consistency);
    j["hypotheses_ok"] = hypotheses_ok();
    j["consistency_ok"] = consistency_ok();
    j["computable"] = computable();
    if (!computability_issues.empty()) j["computability_issues"] = computability_issues;
    return j;
}

namespace {

std::vector<std::string> computability_issues(const CodeSpec& s) {
    std::vector<std::string> out;
    auto need_nonzero = [&](const char* name, bool zero) {
        if (zero) out.push_back(std::string(name) + " must be nonzero");
    };
    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull:
            need_nonzero("f1", s.f1.is_zero());
            need_nonzero("g", s.g.is_zero());
            need_nonzero("a", s.a.is_zero());
            need_nonzero("b", s.b.is_zero());
            if (!s.g.is_fp()) out.push_back("g must be over Z_p for cyclic kinds");
            if (!s.g.is_zero() && s.g.is_fp() && !divides(s.g.rho(), xb1(s)))
                out.push_back("g does not divide x^beta-1");
            if (!s.a.is_zero() && !divides(s.a, xb1(s)))
                out.push_back("a does not divide x^beta-1");
            break;
        case CodeKind::AdditiveCyclicSimple:
            need_nonzero("f1", s.f1.is_zero());
            need_nonzero("g", s.g.is_zero());
            if (!s.g.is_fp()) out.push_back("g must be over Z_p for cyclic kinds");
            break;
        case CodeKind::AdditiveCyclicCoprime:
            need_nonzero("f1", s.f1.is_zero());
            need_nonzero("g", s.g.is_zero());
            need_nonzero("a", s.a.is_zero());
            need_nonzero("b", s.b.is_zero());
            if (!s.g.is_fp()) out.push_back("g must be over Z_p for cyclic kinds");
            if (!s.g.is_zero() && s.g.is_fp() && !divides(s.g.rho(), xb1(s)))
                out.push_back("g does not divide x^beta-1");
            break;
        case CodeKind::AdditiveConstacyclic:
            need_nonzero("f1", s.f1.is_zero());
            need_nonzero("g", s.g.is_zero());
            need_nonzero("a", s.a.is_zero());
            need_nonzero("b", s.b.is_zero());
            if (s.p() <= 2) out.push_back("constacyclic kinds require p > 2");
            if (s.beta() != s.p() - 1) out.push_back("constacyclic kinds require beta = p-1");
            if (!s.g.is_zero() && !exact_quot_r(xbl(s), s.g))
                out.push_back("g does not divide x^beta-lambda (unit-leading division)");
            break;
        case CodeKind::RingCyclic:
            need_nonzero("g", s.g.is_zero());
            need_nonzero("b", s.b.is_zero());
            if (s.beta_shares_factor_with_p()) need_nonzero("a", s.a.is_zero());
            break;
        case CodeKind::RingCyclicSimple:
            need_nonzero("g", s.g.is_zero());
            break;
        case CodeKind::RingConstacyclic:
            need_nonzero("g", s.g.is_zero());
            need_nonzero("b", s.b.is_zero());
            if (s.p() <= 2) out.push_back("constacyclic kinds require p > 2");
            if (s.beta() != s.p() - 1) out.push_back("constacyclic kinds require beta = p-1");
            break;
    }
    if (s.is_additive_kind() && s.alpha() == 0)
        out.push_back("additive kinds require alpha >= 1");
    if (!s.is_additive_kind() && s.alpha() != 0)
        out.push_back("ring kinds require alpha = 0");
    return out;
}

}  // namespace

ValidationReport validate_spec(const CodeSpec& s) {
    ValidationReport rep;
    auto& H = rep.hypotheses;
    const PrimeField f = s.prm.field;

    // kind / parameter shape
    if (s.is_additive_kind())
        H.push_back({"alpha >= 1", s.alpha() >= 1, ""});
    else
        H.push_back({"alpha = 0 for ring kinds", s.alpha() == 0, ""});
    if (s.is_constacyclic_kind()) {
        H.push_back({"p > 2 for constacyclic kinds", s.p() > 2, ""});
        H.push_back({"beta = p-1", s.beta() == s.p() - 1, ""});
    } else {
        H.push_back({"lambda = 1 for cyclic kinds", s.prm.cyclic(), ""});
        const bool wants_shared = s.kind == CodeKind::AdditiveCyclicFull ||
                                  s.kind == CodeKind::AdditiveCyclicSimple ||
                                  s.kind == CodeKind::RingCyclicSimple;
        const bool wants_coprime = s.kind == CodeKind::AdditiveCyclicCoprime;
        if (wants_shared)
            H.push_back({"kind/parameter mismatch", s.beta_shares_factor_with_p(),
                         s.beta_shares_factor_with_p()
                             ? ""
                             : "beta is coprime to p but the kind targets the non-coprime case"});
        if (wants_coprime)
            H.push_back({"kind/parameter mismatch", !s.beta_shares_factor_with_p(),
                         s.beta_shares_factor_with_p()
                             ? "beta shares a factor with p but the kind requires gcd(beta,p)=1"
                             : ""});
    }
    check_unused_slots(s, H);

    const bool cyclic_kind = !s.is_constacyclic_kind();
    if (cyclic_kind && (s.kind != CodeKind::RingConstacyclic))
        H.push_back({"g over Z_p", s.g.is_fp(), ""});

    const FpPoly g_fp = s.g.is_fp() ? s.g.rho() : FpPoly::zero(f);

    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull: {
            H.push_back(s.alpha() >= 1 ? div_check_fp("f1 | x^alpha-1", s.f1, xa1(s))
                                       : Check{"f1 | x^alpha-1", false, "alpha = 0"});
            H.push_back(div_check_fp("a | g", s.a, g_fp));
            H.push_back(div_check_fp("g | x^beta-1", g_fp, xb1(s)));
            H.push_back(div_check_fp("b | g", s.b, g_fp));
            if (auto h = exact_quot(xb1(s), g_fp))
                H.push_back(div_check_fp("a | p1*(x^beta-1)/g", s.a, s.p1 * *h));
            else
                H.push_back({"a | p1*(x^beta-1)/g", false, "not evaluable: g | x^beta-1 fails"});
            if (auto k = exact_quot(xb1(s), s.a))
                H.push_back(div_check_fp("b | p3*(x^beta-1)/a", s.b, s.p3 * *k));
            else
                H.push_back({"b | p3*(x^beta-1)/a", false, "not evaluable: a | x^beta-1 fails"});
            break;
        }
        case CodeKind::AdditiveCyclicSimple: {
            H.push_back(s.alpha() >= 1 ? div_check_fp("f1 | x^alpha-1", s.f1, xa1(s))
                                       : Check{"f1 | x^alpha-1", false, "alpha = 0"});
            const bool div = s.g.is_fp() &&
                             composite_cofactor(g_fp, s.p1, s.p2, xb1(s)).has_value();
            H.push_back({"(g+u*p1+v*p2) | x^beta-1", div, ""});
            break;
        }
        case CodeKind::AdditiveCyclicCoprime:
        case CodeKind::AdditiveConstacyclic: {
            H.push_back(s.alpha() >= 1 ? div_check_fp("f1 | x^alpha-1", s.f1, xa1(s))
                                       : Check{"f1 | x^alpha-1", false, "alpha = 0"});
            if (s.kind == CodeKind::AdditiveCyclicCoprime) {
                H.push_back(div_check_fp("a | g", s.a, g_fp));
                H.push_back(div_check_fp("g | x^beta-1", g_fp, xb1(s)));
                H.push_back(div_check_fp("b | g", s.b, g_fp));
                if (auto k = exact_quot(xb1(s), s.a))
                    H.push_back(div_check_fp("b | p1*(x^beta-1)/a", s.b, s.p1 * *k));
                else
                    H.push_back(
                        {"b | p1*(x^beta-1)/a", false, "not evaluable: a | x^beta-1 fails"});
            } else {
                H.push_back(div_check_r("a | g", RPoly::embed(s.a), s.g));
                H.push_back(div_check_r("g | x^beta-lambda", s.g, xbl(s)));
                H.push_back(div_check_r("b | g", RPoly::embed(s.b), s.g));
                if (auto k = exact_quot_r(xbl(s), RPoly::embed(s.a)))
                    H.push_back(div_check_r("b | p1*(x^beta-lambda)/a", RPoly::embed(s.b),
                                            RPoly::embed(s.p1) * *k));
                else
                    H.push_back({"b | p1*(x^beta-lambda)/a", false,
                                 "not evaluable: a | x^beta-lambda fails"});
            }
            break;
        }
        case CodeKind::RingCyclic: {
            H.push_back(div_check_fp("a | g", s.a, g_fp));
            H.push_back(div_check_fp("g | x^beta-1", g_fp, xb1(s)));
            H.push_back(div_check_fp("b | g", s.b, g_fp));
            if (s.beta_shares_factor_with_p()) {
                if (auto h = exact_quot(xb1(s), g_fp))
                    H.push_back(div_check_fp("a | p1*(x^beta-1)/g", s.a, s.p1 * *h));
                else
                    H.push_back(
                        {"a | p1*(x^beta-1)/g", false, "not evaluable: g | x^beta-1 fails"});
                if (auto k = exact_quot(xb1(s), s.a))
                    H.push_back(div_check_fp("b | p3*(x^beta-1)/a", s.b, s.p3 * *k));
                else
                    H.push_back(
                        {"b | p3*(x^beta-1)/a", false, "not evaluable: a | x^beta-1 fails"});
            } else {
                if (auto k = exact_quot(xb1(s), s.a))
                    H.push_back(div_check_fp("b | p1*(x^beta-1)/a", s.b, s.p1 * *k));
                else
                    H.push_back(
                        {"b | p1*(x^beta-1)/a", false, "not evaluable: a | x^beta-1 fails"});
            }
            break;
        }
        case CodeKind::RingCyclicSimple: {
            const bool div = s.g.is_fp() &&
                             composite_cofactor(g_fp, s.p1, s.p2, xb1(s)).has_value();
            H.push_back({"(g+u*p1+v*p2) | x^beta-1", div, ""});
            break;
        }
        case CodeKind::RingConstacyclic: {
            H.push_back(div_check_r("a | g", RPoly::embed(s.a), s.g));
            H.push_back(div_check_r("g | x^beta-lambda", s.g, xbl(s)));
            H.push_back(div_check_r("b | g", RPoly::embed(s.b), s.g));
            if (auto k = exact_quot_r(xbl(s), RPoly::embed(s.a)))
                H.push_back(div_check_r("b | p1*(x^beta-lambda)/a", RPoly::embed(s.b),
                                        RPoly::embed(s.p1) * *k));
            else
                H.push_back({"b | p1*(x^beta-lambda)/a", false,
                             "not evaluable: a | x^beta-lambda fails"});
            break;
        }
    }

    // necessary conditions derived by the kernel lemmas, reported apart
    auto& C = rep.consistency;
    auto not_eval = [](const char* name, const char* why) {
        return Check{name, false, std::string("not evaluable: ") + why};
    };
    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull: {
            if (s.f1.is_zero()) {
                C.push_back(not_eval("f1 | m2*h*f2", "f1 is zero"));
                C.push_back(not_eval("f1 | l2*k*f3", "f1 is zero"));
                C.push_back(not_eval("f1 | ((x^beta-1)/b)*f4", "f1 is zero"));
                break;
            }
            auto h = exact_quot(xb1(s), g_fp);
            auto k = exact_quot(xb1(s), s.a);
            auto w = exact_quot(xb1(s), s.b);
            if (h) {
                const FpPoly m1 = gcd_list({*h * s.p1, *h * s.p2, xb1(s)});
                const FpPoly m2 = *exact_quot(xb1(s), m1);
                C.push_back(div_check_fp("f1 | m2*h*f2", s.f1, m2 * *h * s.f2));
            } else {
                C.push_back(not_eval("f1 | m2*h*f2", "g | x^beta-1 fails"));
            }
            if (k) {
                const FpPoly l1 = gcd_list({*k * s.p3, xb1(s)});
                const FpPoly l2 = *exact_quot(xb1(s), l1);
                C.push_back(div_check_fp("f1 | l2*k*f3", s.f1, l2 * *k * s.f3));
            } else {
                C.push_back(not_eval("f1 | l2*k*f3", "a | x^beta-1 fails"));
            }
            if (w)
                C.push_back(div_check_fp("f1 | ((x^beta-1)/b)*f4", s.f1, *w * s.f4));
            else
                C.push_back(not_eval("f1 | ((x^beta-1)/b)*f4", "b | x^beta-1 fails"));
            break;
        }
        case CodeKind::AdditiveCyclicSimple: {
            if (s.f1.is_zero()) {
                C.push_back(not_eval("f1 | rho(k)*f2", "f1 is zero"));
                break;
            }
            if (auto k = composite_cofactor(g_fp, s.p1, s.p2, xb1(s)))
                C.push_back(div_check_fp("f1 | rho(k)*f2", s.f1, k->rho() * s.f2));
            else
                C.push_back(not_eval("f1 | rho(k)*f2", "(g+u*p1+v*p2) | x^beta-1 fails"));
            break;
        }
        case CodeKind::AdditiveCyclicCoprime: {
            if (s.f1.is_zero()) {
                C.push_back(not_eval("f1 | m2*h*f2", "f1 is zero"));
                C.push_back(not_eval("f1 | ((x^beta-1)/b)*f3", "f1 is zero"));
                break;
            }
            if (auto h = exact_quot(xb1(s), g_fp)) {
                const FpPoly m1 = gcd_list({*h * s.a, *h * s.p1, xb1(s)});
                const FpPoly m2 = *exact_quot(xb1(s), m1);
                C.push_back(div_check_fp("f1 | m2*h*f2", s.f1, m2 * *h * s.f2));
            } else {
                C.push_back(not_eval("f1 | m2*h*f2", "g | x^beta-1 fails"));
            }
            if (auto w = exact_quot(xb1(s), s.b))
                C.push_back(div_check_fp("f1 | ((x^beta-1)/b)*f3", s.f1, *w * s.f3));
            else
                C.push_back(not_eval("f1 | ((x^beta-1)/b)*f3", "b | x^beta-1 fails"));
            break;
        }
        case CodeKind::AdditiveConstacyclic: {
            if (s.f1.is_zero()) {
                C.push_back(not_eval("f1 | m2*rho(h)*f2", "f1 is zero"));
                C.push_back(not_eval("f1 | rho((x^beta-lambda)/b)*f3", "f1 is zero"));
                break;
            }
            if (auto h = exact_quot_r(xbl(s), s.g)) {
                const FpPoly m1 =
                    gcd_list({(*h * RPoly::embed(s.a)).rho(), (*h * RPoly::embed(s.p1)).rho(),
                              xb1(s)});
                const FpPoly m2 = *exact_quot(xb1(s), m1);
                C.push_back(div_check_fp("f1 | m2*rho(h)*f2", s.f1, m2 * h->rho() * s.f2));
            } else {
                C.push_back(not_eval("f1 | m2*rho(h)*f2", "g | x^beta-lambda fails"));
            }
            if (auto w = exact_quot_r(xbl(s), RPoly::embed(s.b)))
                C.push_back(
                    div_check_fp("f1 | rho((x^beta-lambda)/b)*f3", s.f1, w->rho() * s.f3));
            else
                C.push_back(
                    not_eval("f1 | rho((x^beta-lambda)/b)*f3", "b | x^beta-lambda fails"));
            break;
        }
        default:
            break;  // ring kinds have no kernel lemmas to cross-check
    }

    rep.computability_issues = computability_issues(s);
    return rep;
}

DerivedQuantities derive_quantities(const CodeSpec& s) {
    {
        const auto issues = computability_issues(s);
        if (!issues.empty())
            throw std::invalid_argument("spec not computable: " + issues.front());
    }
    DerivedQuantities d;
    d.kind = s.kind;
    d.t.fill(-1);
    const PrimeField f = s.prm.field;
    const FpPoly g_fp = s.g.is_fp() ? s.g.rho() : FpPoly::zero(f);

    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull: {
            const FpPoly h = *exact_quot(xb1(s), g_fp);
            const FpPoly k = *exact_quot(xb1(s), s.a);
            const FpPoly m1 = gcd_list({h * s.p1, h * s.p2, xb1(s)});
            const FpPoly m2 = *exact_quot(xb1(s), m1);
            const FpPoly l1 = gcd_list({k * s.p3, xb1(s)});
            const FpPoly l2 = *exact_quot(xb1(s), l1);
            d.h = RPoly::embed(h);
            d.k = RPoly::embed(k);
            d.m1 = m1;
            d.m2 = m2;
            d.l1 = l1;
            d.l2 = l2;
            d.t[1] = s.f1.degree();
            d.t[2] = g_fp.degree();
            d.t[3] = s.a.degree();
            d.t[4] = m2.degree();
            d.t[5] = l2.degree();
            d.t[6] = s.b.degree();
            break;
        }
        case CodeKind::AdditiveCyclicSimple: {
            if (auto k = composite_cofactor(g_fp, s.p1, s.p2, xb1(s))) d.k = *k;
            d.t[1] = s.f1.degree();
            d.t[2] = g_fp.degree();
            break;
        }
        case CodeKind::AdditiveCyclicCoprime: {
            const FpPoly h = *exact_quot(xb1(s), g_fp);
            const FpPoly m1 = gcd_list({h * s.a, h * s.p1, xb1(s)});
            const FpPoly m2 = *exact_quot(xb1(s), m1);
            d.h = RPoly::embed(h);
            d.m1 = m1;
            d.m2 = m2;
            d.t[1] = s.f1.degree();
            d.t[2] = g_fp.degree();
            d.t[3] = m2.degree();
            d.t[4] = s.b.degree();
            d.corollary_merged = (s.a == s.p1);
            break;
        }
        case CodeKind::AdditiveConstacyclic: {
            const RPoly h = *exact_quot_r(xbl(s), s.g);
            const FpPoly m1 = gcd_list(
                {(h * RPoly::embed(s.a)).rho(), (h * RPoly::embed(s.p1)).rho(), xb1(s)});
            const FpPoly m2 = *exact_quot(xb1(s), m1);
            d.h = h;
            d.m1 = m1;
            d.m2 = m2;
            d.rho_gcd_convention = true;
            d.t[1] = s.f1.degree();
            d.t[2] = s.g.degree();
            d.t[3] = m2.degree();
            d.t[4] = s.b.degree();
            break;
        }
        case CodeKind::RingCyclic: {
            d.delta = s.right_main().degree();
            d.epsilon = s.right_vb().degree();
            if (s.beta_shares_factor_with_p()) d.gamma = s.right_middle().degree();
            break;
        }
        case CodeKind::RingCyclicSimple: {
            d.delta = s.right_main().degree();
            break;
        }
        case CodeKind::RingConstacyclic: {
            d.delta = s.right_main().degree();
            d.epsilon = s.right_vb().degree();
            break;
        }
    }
    return d;
}

nlohmann::json DerivedQuantities::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    if (h) j["h"] = poly_json(*h);
    if (k) j["k"] = poly_json(*k);
    if (m1) j["m1"] = poly_json(*m1);
    if (m2) j["m2"] = poly_json(*m2);
    if (l1) j["l1"] = poly_json(*l1);
    if (l2) j["l2"] = poly_json(*l2);
    nlohmann::json ts;
    for (int i = 1; i <= 6; ++i)
        if (t[i] >= 0) ts["t" + std::to_string(i)] = t[i];
    j["t"] = ts;
    if (delta >= 0) j["delta"] = delta;
    if (gamma >= 0) j["gamma"] = gamma;
    if (epsilon >= 0) j["epsilon"] = epsilon;
    if (corollary_merged) j["corollary_merged"] = true;
    j["gcd_convention"] = rho_gcd_convention ? "rho-reduced" : "Z_p";
    return j;
}

namespace {

struct BlockDef {
    SpanBlock tag;
    PairWord base;
    std::int64_t count;
    bool msg_over_r;  // message coefficients may carry u/v parts
};

std::int64_t clamp0(std::int64_t v) { return v < 0 ? 0 : v; }

std::vector<BlockDef> span_blocks(const CodeSpec& s, const DerivedQuantities& d) {
    const PrimeField f = s.prm.field;
    const FpPoly zf = FpPoly::zero(f);
    const RPoly zr = RPoly::zero(f);
    const std::int64_t alpha = s.alpha(), beta = s.beta();
    std::vector<BlockDef> out;
    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull: {
            PairWord p2(s.prm, s.f2, s.right_main());
            PairWord p4(s.prm, s.f3, s.right_middle());
            out.push_back({SpanBlock::S1, PairWord(s.prm, s.f1, zr), clamp0(alpha - d.t[1]), false});
            out.push_back({SpanBlock::S2, p2, clamp0(beta - d.t[2]), true});
            out.push_back({SpanBlock::S3, star_mul(*d.h, p2), clamp0(beta - d.t[4]), true});
            out.push_back({SpanBlock::S4, p4, clamp0(beta - d.t[3]), true});
            out.push_back({SpanBlock::S5, star_mul(*d.k, p4), clamp0(beta - d.t[5]), false});
            out.push_back({SpanBlock::S6, PairWord(s.prm, s.f4, s.right_vb()),
                           clamp0(beta - d.t[6]), false});
            break;
        }
        case CodeKind::AdditiveCyclicSimple: {
            out.push_back({SpanBlock::S1, PairWord(s.prm, s.f1, zr), clamp0(alpha - d.t[1]), false});
            out.push_back({SpanBlock::S2, PairWord(s.prm, s.f2, s.right_main()),
                           clamp0(beta - d.t[2]), true});
            break;
        }
        case CodeKind::AdditiveCyclicCoprime:
        case CodeKind::AdditiveConstacyclic: {
            PairWord p2(s.prm, s.f2, s.right_main());
            const std::int64_t s3_count =
                d.corollary_merged ? d.t[2] - s.a.degree() : beta - d.t[3];
            out.push_back({SpanBlock::S1, PairWord(s.prm, s.f1, zr), clamp0(alpha - d.t[1]), false});
            out.push_back({SpanBlock::S2, p2, clamp0(beta - d.t[2]), true});
            out.push_back({SpanBlock::S3, star_mul(*d.h, p2), clamp0(s3_count), true});
            out.push_back({SpanBlock::S4, PairWord(s.prm, s.f3, s.right_vb()),
                           clamp0(beta - d.t[4]), false});
            break;
        }
        case CodeKind::RingCyclic: {
            out.push_back({SpanBlock::S1, PairWord(s.prm, zf, s.right_main()),
                           clamp0(beta - d.delta), true});
            if (s.beta_shares_factor_with_p()) {
                out.push_back({SpanBlock::S2, PairWord(s.prm, zf, s.right_middle()),
                               clamp0(d.delta - d.gamma), true});
                out.push_back({SpanBlock::S3, PairWord(s.prm, zf, s.right_vb()),
                               clamp0(d.delta - d.epsilon), true});
            } else {
                out.push_back({SpanBlock::S2, PairWord(s.prm, zf, s.right_vb()),
                               clamp0(d.delta - d.epsilon), true});
            }
            break;
        }
        case CodeKind::RingCyclicSimple: {
            out.push_back({SpanBlock::S1, PairWord(s.prm, zf, s.right_main()),
                           clamp0(beta - d.delta), true});
            break;
        }
        case CodeKind::RingConstacyclic: {
            out.push_back({SpanBlock::S1, PairWord(s.prm, zf, s.right_main()),
                           clamp0(beta - d.delta), true});
            out.push_back({SpanBlock::S2, PairWord(s.prm, zf, s.right_vb()),
                           clamp0(d.delta - d.epsilon), true});
            break;
        }
    }
    return out;
}

}  // namespace

SpanningSet build_span(const CodeSpec& s) {
    const DerivedQuantities d = derive_quantities(s);
    SpanningSet span{s.prm, s.kind, {}, {}};
    for (const BlockDef& blk : span_blocks(s, d)) {
        span.block_sizes[static_cast<std::size_t>(blk.tag)] =
            static_cast<std::uint32_t>(blk.count);
        PairWord w = blk.base;
        for (std::int64_t i = 0; i < blk.count; ++i) {
            span.elements.push_back({w, blk.tag, static_cast<std::uint32_t>(i)});
            if (i + 1 < blk.count) w = tau_lambda(w);
        }
    }
    return span;
}

nlohmann::json SpanningSet::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    nlohmann::json sizes;
    for (int i = 1; i <= 6; ++i)
        if (block_sizes[i] > 0) sizes["S" + std::to_string(i)] = block_sizes[i];
    j["block_sizes"] = sizes;
    j["count"] = elements.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const SpanElement& e : elements) {
        nlohmann::json el = pair_word_json(e.word);
        el["block"] = "S" + std::to_string(static_cast<int>(e.block));
        el["shift"] = e.shift;
        arr.push_back(el);
    }
    j["elements"] = arr;
    return j;
}

std::optional<std::int64_t> claimed_exponent(const CodeSpec& s) {
    if (!s.is_additive_kind()) return std::nullopt;
    const DerivedQuantities d = derive_quantities(s);
    const std::int64_t alpha = s.alpha(), beta = s.beta(), p = s.p();
    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull:
            return alpha + 2 * beta - d.t[1] - d.t[5] - d.t[6] +
                   3 * (3 * beta - d.t[2] - d.t[4] - d.t[3]);
        case CodeKind::AdditiveCyclicSimple:
            return alpha - d.t[1] + 3 * (beta - d.t[2]);
        case CodeKind::AdditiveCyclicCoprime:
            return alpha + beta - d.t[1] - d.t[4] + 3 * (2 * beta - d.t[2] - d.t[3]);
        case CodeKind::AdditiveConstacyclic:
            return alpha + p - d.t[1] - d.t[4] - 1 + 3 * (2 * p - d.t[2] - d.t[3] - 2);
        default:
            return std::nullopt;
    }
}

std::optional<std::array<std::int64_t, 7>> claimed_block_exponents(const CodeSpec& s) {
    if (!s.is_additive_kind()) return std::nullopt;
    const DerivedQuantities d = derive_quantities(s);
    const std::int64_t alpha = s.alpha(), beta = s.beta();
    std::array<std::int64_t, 7> e;
    e.fill(-1);
    switch (s.kind) {
        case CodeKind::AdditiveCyclicFull:
            e[1] = alpha - d.t[1];
            e[2] = 3 * (beta - d.t[2]);
            e[3] = 3 * (beta - d.t[4]);
            e[4] = 3 * (beta - d.t[3]);
            e[5] = beta - d.t[5];
            e[6] = beta - d.t[6];
            break;
        case CodeKind::AdditiveCyclicSimple:
            e[1] = alpha - d.t[1];
            e[2] = 3 * (beta - d.t[2]);
            break;
        case CodeKind::AdditiveCyclicCoprime:
        case CodeKind::AdditiveConstacyclic:
            e[1] = alpha - d.t[1];
            e[2] = 3 * (beta - d.t[2]);
            e[3] = 3 * (beta - d.t[3]);
            e[4] = beta - d.t[4];
            break;
        default:
            break;
    }
    return e;
}

AmbientBoundReport ambient_bound_check(const CodeSpec& s, std::int64_t exponent) {
    const std::int64_t bound = s.alpha() + 3ll * s.beta();
    return {exponent, bound, exponent <= bound};
}

nlohmann::json AmbientBoundReport::to_json() const {
    nlohmann::json j;
    j["claimed_exponent"] = exponent;
    j["ambient_bound_exponent"] = bound;
    j["flag"] = consistent ? "consistent" : "INCONSISTENT";
    return j;
}

nlohmann::json MessageTuple::to_json() const {
    nlohmann::json j;
    for (int i = 1; i <= 6; ++i)
        if (!s[i].is_zero()) j["s" + std::to_string(i)] = poly_json(s[i]);
    return j;
}

MessageTuple MessageTuple::from_json(PrimeField f, const nlohmann::json& j) {
    MessageTuple m(f);
    for (int i = 1; i <= 6; ++i) {
        const std::string name = "s" + std::to_string(i);
        if (j.contains(name)) m.s[i] = rpoly_from_json(f, j.at(name), name.c_str());
    }
    return m;
}

PairWord encode(const CodeSpec& spec, const MessageTuple& msg) {
    if (!spec.is_additive_kind())
        throw std::invalid_argument("encoding is defined for the additive kinds only");
    const DerivedQuantities d = derive_quantities(spec);
    const std::vector<BlockDef> blocks = span_blocks(spec, d);
    PairWord acc = PairWord::zero(spec.prm);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string name = "s" + std::to_string(i + 1);
        const RPoly& si = msg.s[i + 1];
        const BlockDef& blk = blocks[i];
        if (si.is_zero()) continue;
        if (!blk.msg_over_r && !si.is_fp())
            throw std::invalid_argument("message block " + name +
                                        " must have coefficients in Z_p");
        if (si.degree() > blk.count - 1)
            throw std::invalid_argument("message block " + name + " exceeds degree bound (deg <= " +
                                        std::to_string(blk.count - 1) + ")");
        acc = acc + star_mul(si, blk.base);
    }
    for (std::size_t i = blocks.size(); i < 6; ++i)
        if (!msg.s[i + 1].is_zero())
            throw std::invalid_argument("message block s" + std::to_string(i + 1) +
                                        " is not used by kind " + kind_name(spec.kind));
    return acc;
}

std::vector<MessageBound> encode_block_bounds(const CodeSpec& spec) {
    if (!spec.is_additive_kind())
        throw std::invalid_argument("encoding is defined for the additive kinds only");
    const DerivedQuantities d = derive_quantities(spec);
    std::vector<MessageBound> out;
    for (const BlockDef& blk : span_blocks(spec, d))
        out.push_back({blk.count - 1, blk.msg_over_r});
    return out;
}

RPoly transport_to_constacyclic(const RPoly& s, const RElem& lambda) {
    const PrimeField f = s.field();
    if (f.p() <= 2) throw std::invalid_argument("transport requires p > 2");
    if (lambda.rho() != 1)
        throw std::invalid_argument("lambda must be a unit with free part 1");
    const std::uint32_t n = f.p() - 1;
    const RPoly red = rpoly_mod(s, n, RElem::one(f));
    std::vector<RElem> out;
    out.reserve(red.coeffs().size());
    RElem w = RElem::one(f);
    for (std::size_t i = 0; i < red.coeffs().size(); ++i) {
        out.push_back(red.coeffs()[i] * w);
        w = w * lambda;
    }
    return RPoly(f, std::move(out));
}

RPoly transport_to_cyclic(const RPoly& s, const RElem& lambda) {
    const PrimeField f = s.field();
    if (f.p() <= 2) throw std::invalid_argument("transport requires p > 2");
    if (lambda.rho() != 1)
        throw std::invalid_argument("lambda must be a unit with free part 1");
    const std::uint32_t n = f.p() - 1;
    const RPoly red = rpoly_mod(s, n, lambda);
    const RElem li = lambda.inverse();
    std::vector<RElem> out;
    out.reserve(red.coeffs().size());
    RElem w = RElem::one(f);
    for (std::size_t i = 0; i < red.coeffs().size(); ++i) {
        out.push_back(red.coeffs()[i] * w);
        w = w * li;
    }
    return RPoly(f, std::move(out));
}

CodeSpec normalize_collapsed(const CodeSpec& spec) {
    if (spec.kind != CodeKind::RingCyclic || !spec.beta_shares_factor_with_p())
        throw std::invalid_argument(
            "collapse applies to the non-coprime ring-cyclic triple form");
    if (!spec.g.is_fp() || !(spec.g.rho() == spec.a) || !(spec.a == spec.b))
        throw std::invalid_argument("collapse requires g = a = b");
    if (!composite_cofactor(spec.g.rho(), spec.p1, spec.p2, xb1(spec)))
        throw std::runtime_error("collapse hypothesis violated");
    CodeSpec out(spec.prm, CodeKind::RingCyclicSimple);
    out.g = spec.g;
    out.p1 = spec.p1;
    out.p2 = spec.p2;
    return out;
}

}  // namespace zzuv
