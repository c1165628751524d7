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

#ifndef ZZUV_REPORT_HPP
#define ZZUV_REPORT_HPP

#include <cstdint>
#include <string>

#include "zzuv/oracle.hpp"

namespace zzuv {

inline constexpr int kSchemaVersion = 1;

struct StageSelection {
    bool validate = true;
    bool derive = true;
    bool span = true;
    bool card = true;
    bool enumerate = true;
    bool independence = true;
    bool gray = true;
    bool dual = true;
    bool distance = true;

    static StageSelection all() { return {}; }
    static StageSelection none();
    /// Comma-separated stage names, e.g. "validate,derive".
    static StageSelection parse(const std::string& list);
};

struct ReportOptions {
    std::uint64_t guard = 2'000'000;
    StageSelection stages = StageSelection::all();
    /// Timing is opt-in because reports are byte-identical across runs by
    /// contract and wall-clock numbers would break that.
    bool timing = false;
};

/// The audit-trail report: for every stage the paper's claim (labelled
/// paper-claim) sits next to what the enumeration engine measured
/// (labelled oracle-truth), with an explicit consistent/INCONSISTENT flag
/// on every comparison.
struct RunReport {
    nlohmann::json doc;
    bool hypotheses_failed = false;
    bool any_inconsistent = false;
    bool any_overflow = false;

    std::string json_text() const { return doc.dump(2) + "\n"; }
    std::string text() const;
};

RunReport run_report(const CodeSpec& spec, const ReportOptions& opt);

}  // namespace zzuv

#endif
