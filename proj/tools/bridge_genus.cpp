// Copyright 2026 The bridge-genus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// bridge-genus: enumerate words, print count tables and statistics, and run
// the verification harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 resource cap.

#include "bridge_genus/error.hpp"
#include "bridge_genus/io.hpp"
#include "bridge_genus/oracle.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bg = bridge_genus;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<int> crossings;
    std::optional<int> min_c;
    std::optional<int> max_c;
    std::vector<int> crossings_list;
    bool palindromic_only = false;
    bool dedupe = false;
    std::string format;
    std::string output;
    std::optional<unsigned> threads;
    std::optional<int> max_enum_c;
    bool slow = false;
    std::string inject_fault;
};

unsigned resolve_threads(const Config& cfg) {
    if (cfg.threads) return std::max(1U, *cfg.threads);
    if (const char* env = std::getenv("BRIDGE_GENUS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

bg::io::Format resolve_format(const Config& cfg, bg::io::Format fallback) {
    if (cfg.format.empty()) return fallback;
    const auto f = bg::io::parse_format(cfg.format);
    if (!f) throw UsageError("unknown --format '" + cfg.format + "' (expected csv, json or jsonl)");
    return *f;
}

/// Crossing numbers selected by --crossings, --crossings-list or
/// --min-c/--max-c, in that order of precedence.
std::vector<int> resolve_crossings(const Config& cfg, int default_min, int default_max) {
    if (cfg.crossings) return {*cfg.crossings};
    if (!cfg.crossings_list.empty()) return cfg.crossings_list;
    std::vector<int> out;
    for (int c = cfg.min_c.value_or(default_min); c <= cfg.max_c.value_or(default_max); ++c) out.push_back(c);
    return out;
}

void require_min(const std::vector<int>& cs, int lo, const char* what) {
    for (int c : cs)
        if (c < lo) throw UsageError(std::string(what) + " needs crossing numbers >= " + std::to_string(lo));
}

/// Writes to a sibling temporary and renames on success, so a failed run
/// leaves no partial file behind.
template <typename Fn>
int with_output(const Config& cfg, Fn&& body) {
    if (cfg.output.empty() || cfg.output == "-") return body(std::cout);
    const std::filesystem::path target(cfg.output);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    int rc = kOk;
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw UsageError("cannot open output file '" + cfg.output + "'");
        try {
            rc = body(os);
        } catch (...) {
            os.close();
            std::filesystem::remove(tmp);
            throw;
        }
        os.flush();
        if (!os) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("write to '" + cfg.output + "' failed");
        }
    }
    std::filesystem::rename(tmp, target);
    return rc;
}

int cmd_enumerate(const Config& cfg) {
    const auto cs = resolve_crossings(cfg, 3, 3);
    if (!cfg.crossings && cfg.crossings_list.empty() && !cfg.min_c && !cfg.max_c)
        throw UsageError("enumerate needs --crossings, --crossings-list or --min-c/--max-c");
    require_min(cs, 3, "enumerate");
    if (cfg.palindromic_only && cfg.dedupe) throw UsageError("--palindromic-only and --dedupe are exclusive");
    const auto fmt = resolve_format(cfg, bg::io::Format::Jsonl);
    bg::EnumerationCap cap;
    if (cfg.max_enum_c) cap.max_candidates = std::uint64_t{1} << std::clamp(*cfg.max_enum_c - 2, 1, 62);
    for (int c : cs) bg::detail::check_cap(c, cap);

    return with_output(cfg, [&](std::ostream& os) {
        const std::optional<int> no_mult;
        if (fmt == bg::io::Format::Csv) bg::io::write_csv_header(os, bg::io::word_columns(cfg.dedupe));
        bool first = true;
        if (fmt == bg::io::Format::Json) os << '[';
        auto emit = [&](const bg::Word& w, std::optional<int> m) {
            if (fmt == bg::io::Format::Json) {
                if (!first) os << ',';
                bg::io::write_json(os, bg::io::word_record(w, m));
            } else {
                bg::io::write_word(os, w, fmt, m);
            }
            first = false;
        };
        for (int c : cs) {
            if (cfg.dedupe)
                bg::for_each_class_rep(c, [&](const bg::ClassRep& r) { emit(r.word, r.multiplicity); }, cap);
            else if (cfg.palindromic_only)
                bg::for_each_Tp(c, [&](const bg::Word& w) { emit(w, no_mult); }, cap);
            else
                bg::for_each_T(c, [&](const bg::Word& w) { emit(w, no_mult); }, cap);
        }
        if (fmt == bg::io::Format::Json) os << "]\n";
        return kOk;
    });
}

int cmd_table(const Config& cfg) {
    const auto fmt = resolve_format(cfg, bg::io::Format::Csv);
    const auto cs = resolve_crossings(cfg, 3, 20);
    require_min(cs, 3, "table");
    return with_output(cfg, [&](std::ostream& os) {
        bg::io::write_table(os, cs, fmt);
        return kOk;
    });
}

int cmd_stats(const Config& cfg) {
    const auto cs = resolve_crossings(cfg, 3, 20);
    require_min(cs, 3, "stats");
    const auto fmt = resolve_format(cfg, bg::io::Format::Json);
    const auto ensemble = cfg.palindromic_only ? bg::WordEnsemble::PalindromicWords : bg::WordEnsemble::KnotClasses;
    bg::io::Records r{bg::io::stats_columns(), {}};
    for (int c : cs) r.rows.push_back(bg::io::stats_record(bg::formula_distribution(c, ensemble)));
    return with_output(cfg, [&](std::ostream& os) {
        if (fmt == bg::io::Format::Json && r.rows.size() == 1) {
            bg::io::write_json(os, r.rows.front());
            os << '\n';
        } else {
            bg::io::write_records(os, r, fmt);
        }
        return kOk;
    });
}

int cmd_verify(const Config& cfg) {
    const auto fmt = resolve_format(cfg, bg::io::Format::Json);
    bg::VerifyOptions opt;
    opt.oracle.threads = resolve_threads(cfg);
    const int enum_max = cfg.max_enum_c.value_or(cfg.slow ? 22 : 16);
    if (cfg.slow) opt.genus_crosscheck_max = 20;
    const int formula_max = cfg.max_c.value_or(60);
    if (!cfg.inject_fault.empty()) {
        if (cfg.inject_fault != "t5g1") throw UsageError("unknown fault '" + cfg.inject_fault + "' (known: t5g1)");
        opt.seeds = bg::faulty_seeds_t5g1();
    }
    const auto report = bg::verify_all(enum_max, formula_max, opt);
    return with_output(cfg, [&](std::ostream& os) {
        if (fmt == bg::io::Format::Json) {
            bg::io::write_json(os, report.to_json());
            os << '\n';
        } else {
            bg::io::write_records(os, bg::io::report_records(report), fmt);
        }
        return report.passed() ? kOk : kVerifyFailed;
    });
}

int cmd_normality(const Config& cfg) {
    Config c2 = cfg;
    if (!cfg.crossings && cfg.crossings_list.empty() && !cfg.min_c && !cfg.max_c) c2.crossings_list = {23, 43, 83, 163};
    const auto cs = resolve_crossings(c2, 5, 5);
    require_min(cs, 5, "normality");
    const auto fmt = resolve_format(cfg, bg::io::Format::Csv);
    bg::io::Records r{bg::io::normality_columns(), {}};
    for (int c : cs) r.rows.push_back(bg::io::normality_record(c));
    return with_output(cfg, [&](std::ostream& os) {
        bg::io::write_records(os, r, fmt);
        return kOk;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus statistics of 2-bridge knots"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bridge-genus 1.0.0");

    Config cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv, json or jsonl");
        sub->add_option("--output", cfg.output, "output file (default standard output)");
    };
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--crossings", cfg.crossings, "single crossing number");
        sub->add_option("--min-c", cfg.min_c, "smallest crossing number");
        sub->add_option("--max-c", cfg.max_c, "largest crossing number");
        sub->add_option("--crossings-list", cfg.crossings_list, "comma separated crossing numbers")->delimiter(',');
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the words of T(c) with their genus");
    add_range(enumerate);
    add_common(enumerate);
    enumerate->add_flag("--palindromic-only", cfg.palindromic_only, "only words of palindromic type");
    enumerate->add_flag("--dedupe", cfg.dedupe, "one word per knot, with multiplicity");
    enumerate->add_option("--max-enum-c", cfg.max_enum_c, "largest crossing number to enumerate");

    auto* table = app.add_subcommand("table", "counts t, t_p and knot counts by genus");
    add_range(table);
    add_common(table);

    auto* stats = app.add_subcommand("stats", "moments, median, mode and quasi-symmetry of the genus");
    add_range(stats);
    add_common(stats);
    stats->add_flag("--palindromic-only", cfg.palindromic_only, "use the palindromic words instead of knots");

    auto* verify = app.add_subcommand("verify", "check every formula against exhaustive enumeration");
    add_common(verify);
    verify->add_option("--max-enum-c", cfg.max_enum_c, "largest crossing number to enumerate (default 16)");
    verify->add_option("--max-c", cfg.max_c, "largest crossing number for formula checks (default 60)");
    verify->add_option("--threads", cfg.threads, "worker threads (default $BRIDGE_GENUS_THREADS or 1)");
    verify->add_flag("--slow", cfg.slow, "enumerate up to c = 22, cross-check genus engines up to c = 20");
    verify->add_option("--inject-fault", cfg.inject_fault, "deliberately corrupt a base value (t5g1)");

    auto* normality = app.add_subcommand("normality", "distance to the normal and binomial limits");
    add_range(normality);
    add_common(normality);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg);
        if (*table) return cmd_table(cfg);
        if (*stats) return cmd_stats(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*normality) return cmd_normality(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const bg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.code() == bg::ErrorCode::Unsupported) return kCap;
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
