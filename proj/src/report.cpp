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

#include "zzuv/report.hpp"

#include <chrono>
#include <sstream>

namespace zzuv {

namespace {

nlohmann::json claim(std::int64_t value) {
    return {{"value", value}, {"provenance", "paper-claim"}};
}

nlohmann::json truth(std::int64_t value) {
    return {{"value", value}, {"provenance", "oracle-truth"}};
}

const char* flag(bool consistent) { return consistent ? "consistent" : "INCONSISTENT"; }

class StageClock {
   public:
    explicit StageClock(bool enabled) : enabled_(enabled) {}
    void lap(nlohmann::json& timing, const char* stage) {
        if (!enabled_) return;
        const auto now = std::chrono::steady_clock::now();
        timing[stage] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }

   private:
    bool enabled_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

StageSelection StageSelection::none() {
    StageSelection s;
    s.validate = s.derive = s.span = s.card = s.enumerate = s.independence = s.gray =
        s.dual = s.distance = false;
    return s;
}

StageSelection StageSelection::parse(const std::string& list) {
    StageSelection s = none();
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "validate") s.validate = true;
        else if (item == "derive") s.derive = true;
        else if (item == "span") s.span = true;
        else if (item == "card") s.card = true;
        else if (item == "enumerate") s.enumerate = true;
        else if (item == "independence") s.independence = true;
        else if (item == "gray") s.gray = true;
        else if (item == "dual") s.dual = true;
        else if (item == "distance") s.distance = true;
        else if (item.empty()) continue;
        else throw std::invalid_argument("unknown stage: " + item);
    }
    return s;
}

RunReport run_report(const CodeSpec& spec, const ReportOptions& opt) {
    RunReport rep;
    rep.doc["schema_version"] = kSchemaVersion;
    rep.doc["spec"] = spec.to_json();
    nlohmann::json& stages = rep.doc["stages"];
    nlohmann::json timing;
    StageClock clock(opt.timing);

    const ValidationReport val = validate_spec(spec);
    if (opt.stages.validate) {
        stages["validation"] = val.to_json();
        rep.hypotheses_failed = !val.hypotheses_ok();
        clock.lap(timing, "validate");
    }

    if (!val.computable()) {
        stages["note"] = "spec not computable; derivation stages skipped";
        if (opt.timing) rep.doc["timing_ms"] = timing;
        return rep;
    }

    if (opt.stages.derive) {
        stages["derived"] = derive_quantities(spec).to_json();
        clock.lap(timing, "derive");
    }

    std::optional<SpanningSet> span;
    if (opt.stages.span || opt.stages.independence) {
        span = build_span(spec);
        if (opt.stages.span) stages["span"] = span->to_json();
        clock.lap(timing, "span");
    }

    const std::optional<std::int64_t> claimed = claimed_exponent(spec);
    if (opt.stages.card) {
        nlohmann::json c;
        if (claimed) {
            c["claimed_exponent"] = claim(*claimed);
            const AmbientBoundReport ab = ambient_bound_check(spec, *claimed);
            c["ambient_bound_exponent"] = truth(ab.bound);
            c["ambient_bound_flag"] = flag(ab.consistent);
            if (!ab.consistent) rep.any_inconsistent = true;
        } else {
            c["claimed_exponent"] = nullptr;
            c["note"] = "no cardinality formula is stated for this kind";
        }
        stages["cardinality"] = c;
        clock.lap(timing, "card");
    }

    std::optional<CodewordSet> closure;
    if (opt.stages.enumerate || opt.stages.gray || opt.stages.dual || opt.stages.distance) {
        try {
            closure = span_closure(spec.generators(), spec.prm, opt.guard);
        } catch (const GuardOverflow& e) {
            nlohmann::json o;
            o["overflow"] = true;
            o["guard"] = opt.guard;
            o["partial_size_lower_bound"] = e.partial_lower_bound();
            o["note"] = "claim not checkable at this scale";
            stages["oracle"] = o;
            rep.any_overflow = true;
        }
        clock.lap(timing, "enumerate");
    }

    if (closure && opt.stages.enumerate) {
        nlohmann::json o;
        o["cardinality"] = truth(static_cast<std::int64_t>(closure->size()));
        const auto oexp = closure->exponent();
        o["exponent"] = oexp ? truth(*oexp) : nlohmann::json(nullptr);
        if (claimed) {
            o["claimed_exponent"] = claim(*claimed);
            const bool match = oexp && *oexp == *claimed;
            o["claim_vs_oracle"] = flag(match);
            if (!match) rep.any_inconsistent = true;
        }
        nlohmann::json checks;
        for (ClosureOp op :
             {ClosureOp::Tau, ClosureOp::TauLambda, ClosureOp::StarU, ClosureOp::StarV,
              ClosureOp::StarX, ClosureOp::StarResidues, ClosureOp::Addition})
            checks[closure_op_name(op)] = check_closed_under(*closure, op);
        o["closed_under"] = checks;
        stages["oracle"] = o;
        clock.lap(timing, "oracle-checks");
    }

    if (span && opt.stages.independence) {
        try {
            const IndependenceReport audit =
                independence_audit(*span, claimed_block_exponents(spec), opt.guard);
            nlohmann::json a = audit.to_json();
            if (audit.claimed) {
                bool blocks_match = true;
                for (int i = 1; i <= 6; ++i) {
                    const std::int64_t cl = (*audit.claimed)[i];
                    if (cl >= 0 && cl != audit.measured_block_exponents[i])
                        blocks_match = false;
                }
                a["blocks_vs_claim"] = flag(blocks_match);
                if (!blocks_match) rep.any_inconsistent = true;
            }
            if (closure) {
                const bool spans = closure->size() == audit.closure_size;
                a["span_generates_code"] = flag(spans);
                if (!spans) rep.any_inconsistent = true;
            }
            stages["independence"] = a;
        } catch (const GuardOverflow& e) {
            stages["independence"] = {{"overflow", true},
                                      {"partial_size_lower_bound", e.partial_lower_bound()}};
            rep.any_overflow = true;
        }
        clock.lap(timing, "independence");
    }

    if (closure && opt.stages.gray) {
        stages["gray"] = {{"classification", qc_class_name(qc_image_check(*closure))},
                          {"image_length", spec.prm.gray_len()}};
        clock.lap(timing, "gray");
    }

    if (closure && opt.stages.dual) {
        try {
            const CodewordSet dual = dual_code(*closure, opt.guard);
            nlohmann::json d;
            d["size"] = truth(static_cast<std::int64_t>(dual.size()));
            d["shift_closed"] = check_closed_under(
                dual, spec.prm.cyclic() ? ClosureOp::Tau : ClosureOp::TauLambda);
            stages["dual"] = d;
        } catch (const GuardOverflow&) {
            stages["dual"] = {{"overflow", true}, {"note", "ambient scan exceeds the guard"}};
            rep.any_overflow = true;
        }
        clock.lap(timing, "dual");
    }

    if (closure && opt.stages.distance) {
        nlohmann::json d;
        if (closure->size() > 1) {
            d["hamming_mixed"] = truth(static_cast<std::int64_t>(
                min_distance(*closure, DistanceMetric::HammingMixed)));
            d["gray_hamming"] = truth(static_cast<std::int64_t>(
                min_distance(*closure, DistanceMetric::GrayHamming)));
        } else {
            d["note"] = "no nonzero codeword";
        }
        stages["distance"] = d;
        clock.lap(timing, "distance");
    }

    if (opt.timing) rep.doc["timing_ms"] = timing;
    return rep;
}

namespace {

void emit_rows(std::ostringstream& os, const std::string& stage, const nlohmann::json& j,
               const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object() && value.contains("provenance") && value.contains("value")) {
            os << "  " << stage << "  " << name << " = " << value["value"].dump() << "  ["
               << value["provenance"].get<std::string>() << "]\n";
        } else if (value.is_object()) {
            emit_rows(os, stage, value, name);
        } else {
            os << "  " << stage << "  " << name << " = " << value.dump() << "\n";
        }
    }
}

}  // namespace

std::string RunReport::text() const {
    std::ostringstream os;
    const auto& spec = doc["spec"];
    os << "spec kind=" << spec["kind"].get<std::string>() << " p=" << spec["p"].get<int>()
       << " alpha=" << spec["alpha"].get<int>() << " beta=" << spec["beta"].get<int>()
       << "\n";
    if (doc.contains("stages")) {
        for (const auto& [stage, body] : doc["stages"].items()) {
            os << "stage " << stage << "\n";
            if (body.is_object()) {
                nlohmann::json trimmed = body;
                // keep the text view scannable: the full element listing
                // and per-element flags live in the JSON form
                trimmed.erase("elements");
                trimmed.erase("dependent");
                emit_rows(os, stage, trimmed, "");
            } else {
                os << "  " << stage << " = " << body.dump() << "\n";
            }
        }
    }
    if (doc.contains("timing_ms")) os << "timing_ms " << doc["timing_ms"].dump() << "\n";
    return os.str();
}

}  // namespace zzuv
