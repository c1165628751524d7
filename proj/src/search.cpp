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

#include "zzuv/search.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "zzuv/factorize.hpp"
#include "zzuv/report.hpp"

namespace zzuv {

std::vector<RPoly> divisors_of_xn_minus_lambda(PrimeField f, std::uint32_t n,
                                               const RElem& lambda) {
    if (n > 8) throw std::invalid_argument("search bound exceeded");
    const RPoly target = RPoly::x_pow_n_minus_lambda(f, n, lambda);
    std::vector<RPoly> out{RPoly::one(f), target};
    const std::uint32_t p = f.p();
    // monic candidates of degree d: p^3 choices per lower coefficient
    for (std::uint32_t d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint32_t> digits(3 * d, 0);
        for (;;) {
            std::vector<RElem> c;
            for (std::uint32_t i = 0; i < d; ++i)
                c.emplace_back(f, digits[3 * i], digits[3 * i + 1], digits[3 * i + 2]);
            c.push_back(RElem::one(f));
            RPoly cand(f, std::move(c));
            auto [q, r] = rpoly_divmod_leadunit(target, cand);
            if (r.is_zero()) {
                out.push_back(cand);
                if (q.leading().is_unit()) out.push_back(q.scaled(q.leading().inverse()));
            }
            std::size_t j = 0;
            for (; j < digits.size(); ++j) {
                if (++digits[j] < p) break;
                digits[j] = 0;
            }
            if (j == digits.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const RPoly& a, const RPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            const RElem &x = a.coeffs()[i], &y = b.coeffs()[i];
            if (x.a() != y.a()) return x.a() < y.a();
            if (x.b() != y.b()) return x.b() < y.b();
            if (x.c() != y.c()) return x.c() < y.c();
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// One member of the candidate tuple: either a fixed list of polynomials or
// the full space of polynomials of degree < width (decoded from the index
// as base-p digits, constant term first).
struct Component {
    enum class Kind { FpList, RList, FreePoly } kind;
    std::vector<FpPoly> fp_list;
    std::vector<RPoly> r_list;
    std::uint32_t width = 0;  // FreePoly: number of coefficients
    std::uint64_t size = 0;
};

Component fp_list(std::vector<FpPoly> v) {
    Component c{Component::Kind::FpList, std::move(v), {}, 0, 0};
    c.size = c.fp_list.size();
    return c;
}

Component r_list(std::vector<RPoly> v) {
    Component c{Component::Kind::RList, {}, std::move(v), 0, 0};
    c.size = c.r_list.size();
    return c;
}

Component free_poly(PrimeField f, std::uint32_t width) {
    Component c{Component::Kind::FreePoly, {}, {}, width, 1};
    for (std::uint32_t i = 0; i < width; ++i) c.size *= f.p();
    return c;
}

FpPoly decode_free(PrimeField f, std::uint32_t width, std::uint64_t idx) {
    std::vector<std::int64_t> coeffs(width, 0);
    for (std::uint32_t i = 0; i < width; ++i) {
        coeffs[i] = static_cast<std::int64_t>(idx % f.p());
        idx /= f.p();
    }
    return FpPoly(f, std::move(coeffs));
}

struct Lattice {
    // tuple slot order: f1, f2, f3, f4, g, a, b, p1, p2, p3
    std::vector<std::pair<int, Component>> components;
    std::uint64_t total = 1;

    void add(int slot, Component c) {
        total = c.size == 0 ? 0 : total * c.size;  // sizes stay tiny by the guards above
        components.emplace_back(slot, std::move(c));
    }
};

Lattice build_lattice(const SearchOptions& opt, const CodeParams& prm) {
    const PrimeField f = prm.field;
    Lattice lat;
    const bool additive =
        CodeSpec(prm, opt.kind).is_additive_kind();  // kind shape probe only
    std::vector<FpPoly> div_alpha, div_beta;
    if (additive) div_alpha = divisors_of_xn_minus_1(f, prm.alpha);
    div_beta = divisors_of_xn_minus_1(f, prm.beta);

    const auto g_list = [&]() -> Component {
        if (opt.kind == CodeKind::AdditiveConstacyclic || opt.kind == CodeKind::RingConstacyclic)
            return r_list(divisors_of_xn_minus_lambda(f, prm.beta, prm.lambda));
        std::vector<RPoly> g;
        for (const FpPoly& d : div_beta) g.push_back(RPoly::embed(d));
        return r_list(std::move(g));
    };

    switch (opt.kind) {
        case CodeKind::AdditiveCyclicFull:
            lat.add(0, fp_list(div_alpha));
            lat.add(1, free_poly(f, prm.alpha));
            lat.add(2, free_poly(f, prm.alpha));
            lat.add(3, free_poly(f, prm.alpha));
            lat.add(4, g_list());
            lat.add(5, fp_list(div_beta));
            lat.add(6, fp_list(div_beta));
            lat.add(7, free_poly(f, prm.beta));
            lat.add(8, free_poly(f, prm.beta));
            lat.add(9, free_poly(f, prm.beta));
            break;
        case CodeKind::AdditiveCyclicSimple:
            lat.add(0, fp_list(div_alpha));
            lat.add(1, free_poly(f, prm.alpha));
            lat.add(4, g_list());
            lat.add(7, free_poly(f, prm.beta));
            lat.add(8, free_poly(f, prm.beta));
            break;
        case CodeKind::AdditiveCyclicCoprime:
        case CodeKind::AdditiveConstacyclic:
            lat.add(0, fp_list(div_alpha));
            lat.add(1, free_poly(f, prm.alpha));
            lat.add(2, free_poly(f, prm.alpha));
            lat.add(4, g_list());
            lat.add(5, fp_list(div_beta));
            lat.add(6, fp_list(div_beta));
            lat.add(7, free_poly(f, prm.beta));
            break;
        case CodeKind::RingCyclic:
            lat.add(4, g_list());
            lat.add(5, fp_list(div_beta));
            lat.add(6, fp_list(div_beta));
            lat.add(7, free_poly(f, prm.beta));
            lat.add(8, free_poly(f, prm.beta));
            lat.add(9, free_poly(f, prm.beta));
            break;
        case CodeKind::RingCyclicSimple:
            lat.add(4, g_list());
            lat.add(7, free_poly(f, prm.beta));
            lat.add(8, free_poly(f, prm.beta));
            break;
        case CodeKind::RingConstacyclic:
            lat.add(4, g_list());
            lat.add(5, fp_list(div_beta));
            lat.add(6, fp_list(div_beta));
            lat.add(7, free_poly(f, prm.beta));
            break;
    }
    return lat;
}

CodeSpec decode_candidate(const Lattice& lat, const CodeParams& prm, CodeKind kind,
                          std::uint64_t index) {
    CodeSpec spec(prm, kind);
    const PrimeField f = prm.field;
    for (const auto& [slot, comp] : lat.components) {
        const std::uint64_t digit = index % comp.size;
        index /= comp.size;
        FpPoly fp = FpPoly::zero(f);
        RPoly rp = RPoly::zero(f);
        switch (comp.kind) {
            case Component::Kind::FpList: fp = comp.fp_list[digit]; break;
            case Component::Kind::RList: rp = comp.r_list[digit]; break;
            case Component::Kind::FreePoly: fp = decode_free(f, comp.width, digit); break;
        }
        switch (slot) {
            case 0: spec.f1 = fp; break;
            case 1: spec.f2 = fp; break;
            case 2: spec.f3 = fp; break;
            case 3: spec.f4 = fp; break;
            case 4: spec.g = comp.kind == Component::Kind::RList ? rp : RPoly::embed(fp); break;
            case 5: spec.a = fp; break;
            case 6: spec.b = fp; break;
            case 7: spec.p1 = fp; break;
            case 8: spec.p2 = fp; break;
            case 9: spec.p3 = fp; break;
        }
    }
    return spec;
}

std::uint64_t fnv_bytes(const void* data, std::size_t len) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ull;
    }
    return h;
}

struct Evaluation {
    bool valid = false;
    bool overflow = false;
    std::uint64_t closure_hash = 0;
    SearchRow row;
};

Evaluation evaluate(const Lattice& lat, const CodeParams& prm, const SearchOptions& opt,
                    std::uint64_t index) {
    Evaluation ev;
    const CodeSpec spec = decode_candidate(lat, prm, opt.kind, index);
    const ValidationReport val = validate_spec(spec);
    if (!val.hypotheses_ok() || !val.computable()) return ev;
    ev.valid = true;
    try {
        const CodewordSet set = span_closure(spec.generators(), prm, opt.guard);
        ev.closure_hash =
            fnv_bytes(set.word(0), set.size() * set.word_len() * sizeof(kernels::sym));
        ev.row.size = set.size();
        ev.row.distance = set.size() > 1 ? min_distance(set, opt.metric) : 0;
        ev.row.key = spec.key();
        ev.row.spec = spec.to_json();
    } catch (const GuardOverflow&) {
        ev.overflow = true;
    }
    return ev;
}

void rank(std::vector<SearchRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.distance != b.distance) return a.distance > b.distance;
        if (a.size != b.size) return a.size < b.size;
        return a.key < b.key;
    });
}

std::uint64_t options_fingerprint(const SearchOptions& opt) {
    const std::string s = opt.to_json().dump();
    return fnv_bytes(s.data(), s.size());
}

}  // namespace

nlohmann::json SearchOptions::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["kind"] = kind_name(kind);
    j["lambda"] = lambda;
    j["metric"] = metric == DistanceMetric::GrayHamming ? "gray-hamming" : "hamming-mixed";
    j["top"] = top;
    j["guard"] = guard;
    j["budget"] = budget;
    j["seed"] = seed;
    return j;
}

nlohmann::json SearchOutcome::to_json(const SearchOptions& opt) const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["options"] = opt.to_json();
    j["lattice_size"] = lattice_size;
    j["cursor"] = cursor;
    j["examined"] = examined;
    j["valid"] = valid;
    j["overflowed"] = overflowed;
    j["deduplicated"] = deduplicated;
    j["budget_exhausted"] = budget_exhausted;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SearchRow& r : rows) {
        nlohmann::json e;
        e["distance"] = r.distance;
        e["size"] = r.size;
        e["spec"] = r.spec;
        rows_json.push_back(e);
    }
    j["rows"] = rows_json;
    return j;
}

SearchOutcome run_search(const SearchOptions& opt) {
    PrimeField f(opt.p);
    const RElem lambda(f, opt.lambda[0], opt.lambda[1], opt.lambda[2]);
    const CodeParams prm(f, opt.alpha, opt.beta, lambda);
    const Lattice lat = build_lattice(opt, prm);

    SearchOutcome out;
    out.lattice_size = lat.total;
    std::vector<SearchRow> rows;
    std::set<std::uint64_t> seen;

    // resume from the progress record when it matches these options
    const std::uint64_t fp = options_fingerprint(opt);
    {
        std::ifstream in(opt.progress_path);
        if (in.good()) {
            nlohmann::json j;
            try {
                in >> j;
                if (j.value("fingerprint", 0ull) == fp) {
                    out.cursor = j.value("cursor", 0ull);
                    out.examined = j.value("examined", 0ull);
                    out.valid = j.value("valid", 0ull);
                    out.overflowed = j.value("overflowed", 0ull);
                    out.deduplicated = j.value("deduplicated", 0ull);
                    for (const auto& h : j["seen"]) seen.insert(h.get<std::uint64_t>());
                    for (const auto& r : j["rows"]) {
                        SearchRow row;
                        row.distance = r["distance"].get<std::uint64_t>();
                        row.size = r["size"].get<std::uint64_t>();
                        row.spec = r["spec"];
                        row.key = r["key"].get<std::string>();
                        rows.push_back(std::move(row));
                    }
                }
            } catch (...) {
                // unreadable progress records are ignored, the search restarts
            }
        }
    }

    const unsigned jobs = std::max(1u, opt.jobs);
    constexpr std::uint64_t kChunk = 256;
    std::vector<Evaluation> slots;

    auto save_progress = [&]() {
        nlohmann::json j;
        j["schema_version"] = kSchemaVersion;
        j["fingerprint"] = fp;
        j["cursor"] = out.cursor;
        j["examined"] = out.examined;
        j["valid"] = out.valid;
        j["overflowed"] = out.overflowed;
        j["deduplicated"] = out.deduplicated;
        j["seen"] = seen;
        nlohmann::json rj = nlohmann::json::array();
        for (const SearchRow& r : rows) {
            nlohmann::json e;
            e["distance"] = r.distance;
            e["size"] = r.size;
            e["spec"] = r.spec;
            e["key"] = r.key;
            rj.push_back(e);
        }
        j["rows"] = rj;
        std::ofstream os(opt.progress_path);
        os << j.dump() << "\n";
    };

    while (out.cursor < lat.total && out.examined < opt.budget) {
        const std::uint64_t n =
            std::min({kChunk, lat.total - out.cursor, opt.budget - out.examined});
        slots.assign(n, Evaluation{});
        if (jobs == 1) {
            for (std::uint64_t i = 0; i < n; ++i)
                slots[i] = evaluate(lat, prm, opt, out.cursor + i);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::uint64_t> next{0};
            for (unsigned t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        const std::uint64_t i = next.fetch_add(1);
                        if (i >= n) return;
                        slots[i] = evaluate(lat, prm, opt, out.cursor + i);
                    }
                });
            for (auto& th : pool) th.join();
        }
        // merge in index order so dedup and ranking stay deterministic
        for (std::uint64_t i = 0; i < n; ++i) {
            Evaluation& ev = slots[i];
            if (!ev.valid) continue;
            ++out.valid;
            if (ev.overflow) {
                ++out.overflowed;
                continue;
            }
            if (!seen.insert(ev.closure_hash).second) {
                ++out.deduplicated;
                continue;
            }
            rows.push_back(std::move(ev.row));
        }
        out.cursor += n;
        out.examined += n;
        rank(rows);
        if (rows.size() > std::max<std::size_t>(opt.top, 64))
            rows.resize(std::max<std::size_t>(opt.top, 64));
        save_progress();
    }

    out.budget_exhausted = out.cursor < lat.total;
    rank(rows);
    if (rows.size() > opt.top) rows.resize(opt.top);
    out.rows = std::move(rows);

    std::ofstream os(opt.results_path);
    os << out.to_json(opt).dump(2) << "\n";
    return out;
}

}  // namespace zzuv
