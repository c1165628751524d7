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

// Batch front door: read a generator-tuple file, run any pipeline stage,
// and emit machine- or human-readable reports in which every paper claim
// sits next to the enumeration engine's verdict.
//
// Exit codes: 0 ok; 1 hypothesis/consistency failure (and, under --strict,
// any INCONSISTENT flag); 2 input error; 3 guard overflow under --strict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "zzuv/report.hpp"
#include "zzuv/search.hpp"

namespace {

using namespace zzuv;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOverflow = 3;

struct CommonOpts {
    std::string spec_path;
    std::string format = "text";
    std::uint64_t guard = 2'000'000;
    bool strict = false;
    bool timing = false;
};

CodeSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open spec file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);  // parse errors carry byte positions
    return CodeSpec::from_json(j);
}

void print_report(const RunReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.json_text();
    else
        std::cout << rep.text();
}

int exit_code(const RunReport& rep, bool strict) {
    if (strict && rep.any_inconsistent) return kExitFailedCheck;
    if (strict && rep.any_overflow) return kExitOverflow;
    return kExitOk;
}

int run_stage(const CommonOpts& c, StageSelection stages) {
    const CodeSpec spec = load_spec(c.spec_path);
    ReportOptions opt;
    opt.guard = c.guard;
    opt.stages = stages;
    opt.timing = c.timing;
    const RunReport rep = run_report(spec, opt);
    print_report(rep, c.format);
    return exit_code(rep, c.strict);
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("spec", c.spec_path, "generator tuple JSON file")->required();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--guard", c.guard, "enumeration guard (max words)");
    cmd->add_flag("--strict", c.strict, "nonzero exit on INCONSISTENT flags or overflow");
    cmd->add_flag("--timing", c.timing,
                  "include wall-clock timings (breaks byte-identical reports)");
}

MessageTuple random_message(const CodeSpec& spec, std::uint64_t seed) {
    const PrimeField f = spec.prm.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(0, static_cast<int>(f.p()) - 1);
    MessageTuple m(f);
    const auto bounds = encode_block_bounds(spec);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        std::vector<RElem> coeffs;
        for (std::int64_t d = 0; d <= bounds[i].max_degree; ++d)
            coeffs.emplace_back(f, coef(rng), bounds[i].over_r ? coef(rng) : 0,
                                bounds[i].over_r ? coef(rng) : 0);
        m.s[i + 1] = RPoly(f, std::move(coeffs));
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "zzuv - exact workbench for additive cyclic and constacyclic codes over "
        "Z_p and Z_p+uZ_p+vZ_p"};
    app.require_subcommand(1);

    CommonOpts c;
    std::string stages_list;
    std::string out_path;
    std::string metric_name = "gray-hamming";
    std::string message_path;
    std::uint64_t seed = 0;

    CLI::App* cmd_validate = app.add_subcommand("validate", "check the theorem hypotheses");
    add_common(cmd_validate, c);

    CLI::App* cmd_derive = app.add_subcommand("derive", "derive h, k, m1, m2, l1, l2, t_i");
    add_common(cmd_derive, c);

    CLI::App* cmd_span = app.add_subcommand("span", "emit the minimal spanning set");
    add_common(cmd_span, c);

    CLI::App* cmd_card =
        app.add_subcommand("card", "claimed cardinality and the ambient-bound audit");
    add_common(cmd_card, c);

    CLI::App* cmd_enum =
        app.add_subcommand("enumerate", "expand the code by fixed-point enumeration");
    add_common(cmd_enum, c);
    cmd_enum->add_option("--out", out_path, "write the sorted word dump to this file");

    CLI::App* cmd_gray = app.add_subcommand("gray", "classify the Gray image");
    add_common(cmd_gray, c);

    CLI::App* cmd_dual = app.add_subcommand("dual", "scan the ambient for the dual code");
    add_common(cmd_dual, c);

    CLI::App* cmd_dist = app.add_subcommand("distance", "exhaustive minimum distance");
    add_common(cmd_dist, c);

    CLI::App* cmd_encode = app.add_subcommand("encode", "encode a message tuple");
    add_common(cmd_encode, c);
    cmd_encode->add_option("message", message_path,
                           "message JSON file (omit for a seeded random in-bounds message)");
    cmd_encode->add_option("--seed", seed, "seed for the random message");

    CLI::App* cmd_report = app.add_subcommand("report", "run every stage");
    add_common(cmd_report, c);
    cmd_report->add_option("--stages", stages_list, "comma-separated stage subset");

    CLI::App* cmd_search =
        app.add_subcommand("search", "rank generator tuples over the divisor lattices");
    SearchOptions sopt;
    std::string kind_name_opt = "additive-cyclic-simple";
    cmd_search->add_option("--p", sopt.p, "prime modulus")->required();
    cmd_search->add_option("--alpha", sopt.alpha, "left length (0 for ring kinds)")
        ->required();
    cmd_search->add_option("--beta", sopt.beta, "right length")->required();
    cmd_search->add_option("--kind", kind_name_opt, "code kind")->required();
    cmd_search->add_option("--lambda", sopt.lambda, "constacyclic unit a b c")->expected(3);
    cmd_search->add_option("--metric", metric_name, "ranking metric")
        ->check(CLI::IsMember({"gray-hamming", "hamming-mixed"}));
    cmd_search->add_option("--top", sopt.top, "rows to keep");
    cmd_search->add_option("--guard", sopt.guard, "per-candidate enumeration guard");
    cmd_search->add_option("--budget", sopt.budget, "max candidates to examine");
    cmd_search->add_option("--jobs", sopt.jobs, "worker threads");
    cmd_search->add_option("--seed", sopt.seed, "echoed into the result record");
    cmd_search->add_option("--results", sopt.results_path, "results file");
    cmd_search->add_option("--progress", sopt.progress_path, "resumable progress record");
    std::string search_format = "text";
    cmd_search->add_option("--format", search_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_validate->parsed()) {
            const CodeSpec spec = load_spec(c.spec_path);
            const ValidationReport rep = validate_spec(spec);
            nlohmann::json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["spec"] = spec.to_json();
            doc["validation"] = rep.to_json();
            if (c.format == "json") {
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& list : {rep.hypotheses, rep.consistency})
                    for (const Check& ch : list)
                        std::cout << (ch.pass ? "pass  " : "FAIL  ") << ch.name
                                  << (ch.detail.empty() ? "" : "  (" + ch.detail + ")")
                                  << "\n";
                std::cout << (rep.hypotheses_ok() ? "hypotheses: ok" : "hypotheses: FAILED")
                          << "\n"
                          << (rep.consistency_ok() ? "consistency: ok"
                                                   : "consistency: VIOLATIONS")
                          << "\n";
            }
            return rep.hypotheses_ok() ? kExitOk : kExitFailedCheck;
        }
        if (cmd_derive->parsed()) {
            StageSelection s = StageSelection::none();
            s.validate = s.derive = true;
            return run_stage(c, s);
        }
        if (cmd_span->parsed()) {
            StageSelection s = StageSelection::none();
            s.validate = s.span = true;
            return run_stage(c, s);
        }
        if (cmd_card->parsed()) {
            StageSelection s = StageSelection::none();
            s.validate = s.card = true;
            return run_stage(c, s);
        }
        if (cmd_enum->parsed()) {
            const CodeSpec spec = load_spec(c.spec_path);
            ReportOptions opt;
            opt.guard = c.guard;
            opt.stages = StageSelection::none();
            opt.stages.validate = opt.stages.card = opt.stages.enumerate = true;
            const RunReport rep = run_report(spec, opt);
            print_report(rep, c.format);
            if (!out_path.empty() && !rep.any_overflow) {
                const CodewordSet set = span_closure(spec.generators(), spec.prm, c.guard);
                std::ofstream os(out_path);
                set.dump(os);
            }
            return exit_code(rep, c.strict);
        }
        if (cmd_gray->parsed()) {
            StageSelection s = StageSelection::none();
            s.gray = true;
            return run_stage(c, s);
        }
        if (cmd_dual->parsed()) {
            StageSelection s = StageSelection::none();
            s.dual = true;
            return run_stage(c, s);
        }
        if (cmd_dist->parsed()) {
            StageSelection s = StageSelection::none();
            s.distance = true;
            return run_stage(c, s);
        }
        if (cmd_encode->parsed()) {
            const CodeSpec spec = load_spec(c.spec_path);
            MessageTuple msg(spec.prm.field);
            if (!message_path.empty()) {
                std::ifstream in(message_path);
                if (!in.good())
                    throw std::invalid_argument("cannot open message file: " + message_path);
                msg = MessageTuple::from_json(spec.prm.field, nlohmann::json::parse(in));
            } else {
                msg = random_message(spec, seed);
            }
            const PairWord word = encode(spec, msg);
            nlohmann::json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["message"] = msg.to_json();
            doc["codeword"] = pair_word_json(word);
            doc["gray"] = gray_psi(word);
            if (c.format == "json") {
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "codeword " << word.str() << "\n";
                std::cout << "gray";
                for (auto s : gray_psi(word)) std::cout << ' ' << s;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (cmd_report->parsed()) {
            const CodeSpec spec = load_spec(c.spec_path);
            ReportOptions opt;
            opt.guard = c.guard;
            opt.timing = c.timing;
            if (!stages_list.empty()) opt.stages = StageSelection::parse(stages_list);
            const RunReport rep = run_report(spec, opt);
            print_report(rep, c.format);
            return exit_code(rep, c.strict);
        }
        if (cmd_search->parsed()) {
            sopt.kind = kind_from_name(kind_name_opt);
            sopt.metric = metric_name == "hamming-mixed" ? DistanceMetric::HammingMixed
                                                         : DistanceMetric::GrayHamming;
            const SearchOutcome out = run_search(sopt);
            if (search_format == "json") {
                std::cout << out.to_json(sopt).dump(2) << "\n";
            } else {
                std::cout << "lattice " << out.lattice_size << ", examined " << out.examined
                          << ", valid " << out.valid << ", overflowed " << out.overflowed
                          << ", deduplicated " << out.deduplicated
                          << (out.budget_exhausted ? " [partial: budget exhausted]" : "")
                          << "\n";
                for (const SearchRow& r : out.rows)
                    std::cout << "d=" << r.distance << "  size=" << r.size << "  "
                              << r.spec.dump() << "\n";
            }
            return kExitOk;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const GuardOverflow& e) {
        std::cerr << "guard overflow: at least " << e.partial_lower_bound() << " words\n";
        return c.strict ? kExitOverflow : kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
