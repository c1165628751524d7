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

#ifndef ZZUV_SEARCH_HPP
#define ZZUV_SEARCH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zzuv/oracle.hpp"

namespace zzuv {

/// All monic unit-leading divisors of x^n - lambda over R, by bounded
/// trial division (divisor/cofactor pairs up to degree n/2), sorted by
/// (degree, coefficient order) and duplicate-free.
std::vector<RPoly> divisors_of_xn_minus_lambda(PrimeField f, std::uint32_t n,
                                               const RElem& lambda);

struct SearchOptions {
    std::uint32_t p = 2;
    std::uint32_t alpha = 2;
    std::uint32_t beta = 2;
    CodeKind kind = CodeKind::AdditiveCyclicSimple;
    std::array<std::int64_t, 3> lambda{1, 0, 0};
    DistanceMetric metric = DistanceMetric::GrayHamming;
    std::uint32_t top = 10;
    std::uint64_t guard = 100000;
    std::uint64_t budget = 20000;  // candidates examined before flagging partial results
    unsigned jobs = 1;
    std::uint64_t seed = 0;  // echoed into outputs (reserved for randomized drivers)
    std::string results_path = "zzuv_search_results.json";
    std::string progress_path = "zzuv_search_progress.json";

    nlohmann::json to_json() const;
};

struct SearchRow {
    std::uint64_t distance;
    std::uint64_t size;
    std::string key;  // canonical spec key, the tie-break and dedup identity
    nlohmann::json spec;
};

struct SearchOutcome {
    std::vector<SearchRow> rows;  // ranked: distance desc, size asc, key asc
    std::uint64_t lattice_size = 0;
    std::uint64_t cursor = 0;     // next unexamined candidate index
    std::uint64_t examined = 0;
    std::uint64_t valid = 0;
    std::uint64_t overflowed = 0;
    std::uint64_t deduplicated = 0;
    bool budget_exhausted = false;

    nlohmann::json to_json(const SearchOptions& opt) const;
};

/// Deterministic exhaustive search over the divisor lattices of the kind's
/// generator tuple: candidates are enumerated in a fixed mixed-radix
/// order, validated, expanded through the enumeration engine, deduplicated
/// by closure content, and ranked by minimum distance. Resumable through
/// the progress record file; ordering never depends on completion time.
SearchOutcome run_search(const SearchOptions& opt);

}  // namespace zzuv

#endif
