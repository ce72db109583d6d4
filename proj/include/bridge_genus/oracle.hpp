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


#pragma once

// Ground truth by exhaustion, and the harness that diffs every formula
// against it.

#include "bridge_genus/counts.hpp"
#include "bridge_genus/error.hpp"
#include "bridge_genus/exact.hpp"
#include "bridge_genus/genus.hpp"
#include "bridge_genus/report.hpp"
#include "bridge_genus/stats.hpp"
#include "bridge_genus/golden.hpp"
#include "bridge_genus/word.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <vector>

namespace bridge_genus {

struct OracleOptions {
    EnumerationCap cap{};
    unsigned threads = 1;
};

namespace detail {

/// Per-shard tallies; merged by plain addition.
struct Tally {
    std::vector<Count> by_genus; // index g
    Count sum_g = 0;
    Count sum_g2 = 0;

    void add(int g, int weight) {
        if (static_cast<std::size_t>(g) >= by_genus.size()) by_genus.resize(static_cast<std::size_t>(g) + 1, 0);
        by_genus[static_cast<std::size_t>(g)] += weight;
        sum_g += g;
        sum_g2 += g * g;
    }

    void merge(const Tally& o) {
        if (o.by_genus.size() > by_genus.size()) by_genus.resize(o.by_genus.size(), 0);
        for (std::size_t i = 0; i < o.by_genus.size(); ++i) by_genus[i] += o.by_genus[i];
        sum_g += o.sum_g;
        sum_g2 += o.sum_g2;
    }
};

inline unsigned shard_bits(int c, unsigned threads) {
    if (threads <= 1) return 0;
    const unsigned want = std::bit_width(4 * threads - 1);
    return std::min<unsigned>(want, static_cast<unsigned>(c - 2));
}

/// Scans T(c) (or one representative per class) across shards. Each worker
/// owns its shard tallies, so nothing is shared during the scan.
inline Tally scan_T(int c, bool class_reps, const OracleOptions& opt) {
    check_cap(c, opt.cap);
    const unsigned bits = shard_bits(c, opt.threads);
    const std::size_t shards = std::size_t{1} << bits;
    std::vector<Tally> parts(shards);
    auto work = [&](std::size_t s) {
        const Shard shard{bits, s};
        if (class_reps)
            for_each_class_rep(
                c, [&](const ClassRep& r) { parts[s].add(genus_by_reduction(r.word), 1); }, opt.cap, shard);
        else
            for_each_T(c, [&](const Word& w) { parts[s].add(genus_by_reduction(w), 1); }, opt.cap, shard);
    };
    if (shards == 1) {
        work(0);
    } else {
        const unsigned n = std::min<unsigned>(opt.threads, static_cast<unsigned>(shards));
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t s = t; s < shards; s += n) work(s);
            });
    }
    Tally total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

inline Tally scan_Tp(int c, const OracleOptions& opt) {
    Tally t;
    for_each_Tp(c, [&](const Word& w) { t.add(genus_by_reduction(w), 1); }, opt.cap);
    return t;
}

inline GenusDistribution to_distribution(int c, WordEnsemble e, const Tally& t) {
    std::vector<Count> counts(static_cast<std::size_t>(max_genus(c)), 0);
    for (std::size_t g = 1; g < t.by_genus.size(); ++g) {
        if (t.by_genus[g] == 0) continue;
        if (static_cast<int>(g) > max_genus(c))
            throw Error(ErrorCode::InvalidArgument, "genus outside the admissible range at c=" + std::to_string(c));
        counts[g - 1] = t.by_genus[g];
    }
    return make_distribution(c, e, std::move(counts));
}

} // namespace detail

/// Counts by genus over T(c), T_p(c) or the knot classes, by exhaustion.
inline GenusDistribution empirical_distribution(int c, WordEnsemble ensemble, const OracleOptions& opt = {}) {
    switch (ensemble) {
    case WordEnsemble::AllWords: return detail::to_distribution(c, ensemble, detail::scan_T(c, false, opt));
    case WordEnsemble::PalindromicWords: return detail::to_distribution(c, ensemble, detail::scan_Tp(c, opt));
    case WordEnsemble::KnotClasses: return detail::to_distribution(c, ensemble, detail::scan_T(c, true, opt));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ensemble");
}

inline TotalsBundle empirical_totals(int c, const OracleOptions& opt = {}) {
    const auto all = detail::scan_T(c, false, opt);
    const auto pal = detail::scan_Tp(c, opt);
    return {all.sum_g, pal.sum_g, all.sum_g2, pal.sum_g2};
}

enum class Source { Formula, Oracle };

inline GenusDistribution distribution(int c, WordEnsemble ensemble, Source source, const OracleOptions& opt = {}) {
    if (c < 3) throw Error(ErrorCode::InvalidArgument, "crossing number must be at least 3");
    return source == Source::Formula ? formula_distribution(c, ensemble) : empirical_distribution(c, ensemble, opt);
}

// ---------------------------------------------------------------------------
// verify_all

struct VerifyOptions {
    OracleOptions oracle{};
    TSeeds seeds{};               // mutate to self-test the harness
    int totals_max = 200;         // closed vs recursive totals
    int genus_crosscheck_max = 14; // reduction vs Seifert
    int median_max = 64;
    int qs_max = 50;
};

/// Seeds with t(5,1) replaced by 1.
inline TSeeds faulty_seeds_t5g1() {
    TSeeds s;
    s.t5g1 = 1;
    return s;
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

inline void verify_oracle(VerificationReport& report, int c_enum_max, const VerifyOptions& opt) {
    CheckBuilder t_chk("formula vs oracle: t(c,g)", 3, c_enum_max);
    CheckBuilder tp_chk("formula vs oracle: t_p(c,g)", 3, c_enum_max);
    CheckBuilder tb_chk("formula vs oracle: tbar(c,g)", 3, c_enum_max);
    CheckBuilder tot_chk("totals: oracle vs recurrence", 3, c_enum_max);
    CheckBuilder var_chk("knot variance: totals vs oracle distribution", 3, c_enum_max);
    const auto rec = totals_recursive_table(std::max(c_enum_max, 3));
    for (int c = 3; c <= c_enum_max; ++c) {
        const auto all = scan_T(c, false, opt.oracle);
        const auto pal = scan_Tp(c, opt.oracle);
        const auto knots = to_distribution(c, WordEnsemble::KnotClasses, scan_T(c, true, opt.oracle));
        const auto d_all = to_distribution(c, WordEnsemble::AllWords, all);
        const auto d_pal = to_distribution(c, WordEnsemble::PalindromicWords, pal);
        for (int g = 1; g <= max_genus(c); ++g) {
            t_chk.expect_equal(c, g, t_of(c, g), d_all.count(g));
            tp_chk.expect_equal(c, g, tp_of(c, g), d_pal.count(g));
            tb_chk.expect_equal(c, g, tbar_of(c, g), knots.count(g));
        }
        const TotalsBundle r = rec[static_cast<std::size_t>(c)];
        tot_chk.expect_equal(c, std::nullopt, r.g_total, all.sum_g);
        tot_chk.expect_equal(c, std::nullopt, r.gp_total, pal.sum_g);
        tot_chk.expect_equal(c, std::nullopt, r.g2_total, all.sum_g2);
        tot_chk.expect_equal(c, std::nullopt, r.gp2_total, pal.sum_g2);
        var_chk.expect(c, std::nullopt, knot_variance(c) == variance(knots), to_string(knot_variance(c)),
                       to_string(variance(knots)));
    }
    report.add(std::move(t_chk).finish());
    report.add(std::move(tp_chk).finish());
    report.add(std::move(tb_chk).finish());
    report.add(std::move(tot_chk).finish());
    report.add(std::move(var_chk).finish());

    const int gmax = std::min(c_enum_max, opt.genus_crosscheck_max);
    if (gmax >= 3) {
        CheckBuilder chk("genus engine: reduction vs Seifert circles", 3, gmax);
        for (int c = 3; c <= gmax; ++c)
            for_each_T(
                c,
                [&](const Word& w) {
                    const int a = genus_by_reduction(w);
                    int b = -1;
                    try {
                        b = genus_by_seifert(w);
                    } catch (const Error&) {
                    }
                    chk.expect_equal(c, a, a, b);
                },
                opt.oracle.cap);
        report.add(std::move(chk).finish());
    }
}

inline void verify_formulas(VerificationReport& report, int c_formula_max, const VerifyOptions& opt) {
    if (c_formula_max < 3) return;
    const CountTable t_rec = t_recurrence_table(c_formula_max, opt.seeds);
    const CountTable tp_rec = tp_recurrence_table(std::max(2 * c_formula_max - 4, c_formula_max));
    const CountTable tb_rec = tbar_recurrence_table(c_formula_max, tp_rec);

    CheckBuilder t_chk("closed vs recurrence: t(c,g)", 3, c_formula_max);
    CheckBuilder tp_chk("closed vs recurrence: t_p(c,g)", 3, c_formula_max);
    CheckBuilder tb_chk("closed vs recurrence: tbar(c,g)", 3, c_formula_max);
    CheckBuilder sum_chk("recurrence row sum: sum_g t(c,g) = t(c)", 3, c_formula_max);
    for (int c = 3; c <= c_formula_max; ++c) {
        Count row = 0;
        for (int g = 1; g <= c; ++g) {
            t_chk.expect_equal(c, g, t_of(c, g), t_rec(c, g));
            tp_chk.expect_equal(c, g, tp_of(c, g), tp_rec(c, g));
            tb_chk.expect_equal(c, g, tbar_of(c, g), tb_rec(c, g));
            row += t_rec(c, g);
        }
        sum_chk.expect_equal(c, std::nullopt, t_total(c), row);
    }
    report.add(std::move(t_chk).finish());
    report.add(std::move(tp_chk).finish());
    report.add(std::move(tb_chk).finish());
    report.add(std::move(sum_chk).finish());

    if (c_formula_max >= 7) report.append(identity_suite(c_formula_max));
}

inline void verify_totals(VerificationReport& report, const VerifyOptions& opt) {
    if (opt.totals_max < 4) return;
    CheckBuilder chk("totals: closed vs recurrence", 4, opt.totals_max);
    const auto rec = totals_recursive_table(opt.totals_max);
    for (int c = 4; c <= opt.totals_max; ++c) {
        const TotalsBundle cl = totals_closed(c);
        const TotalsBundle& r = rec[static_cast<std::size_t>(c)];
        chk.expect_equal(c, std::nullopt, r.g_total, cl.g_total);
        chk.expect_equal(c, std::nullopt, r.gp_total, cl.gp_total);
        chk.expect_equal(c, std::nullopt, r.g2_total, cl.g2_total);
        chk.expect_equal(c, std::nullopt, r.gp2_total, cl.gp2_total);
    }
    report.add(std::move(chk).finish());
}

inline void verify_shape(VerificationReport& report, const VerifyOptions& opt) {
    {
        CheckBuilder chk("knots: floor((c+2)/4) in median and mode sets", 3, opt.median_max);
        for (int c = 3; c <= opt.median_max; ++c) {
            const auto d = formula_distribution(c, WordEnsemble::KnotClasses);
            const int k = (c + 2) / 4;
            const auto med = median_set(d);
            const auto mode = mode_set(d);
            chk.expect(c, k, contains(med, k) && contains(mode, k), std::to_string(k),
                       "median " + join(med) + " mode " + join(mode));
        }
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder chk("knots: quasi-symmetry by parity", 3, opt.qs_max);
        for (int c = 3; c <= opt.qs_max; ++c) {
            const QsClass q = qs_classify(formula_distribution(c, WordEnsemble::KnotClasses));
            const QsClass want = c % 2 ? QsClass::LeftDominated : QsClass::RightDominated;
            chk.expect(c, std::nullopt, q == want || q == QsClass::Both, std::string(to_string(want)),
                       std::string(to_string(q)));
        }
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder t_chk("words: floor((c+2)/4) in median and mode sets", 5, opt.qs_max);
        CheckBuilder tp_chk("palindromic words: median and mode", 5, opt.qs_max);
        for (int c = 5; c <= opt.qs_max; ++c) {
            const auto dt = formula_distribution(c, WordEnsemble::AllWords);
            const int kt = (c + 2) / 4;
            t_chk.expect(c, kt, contains(median_set(dt), kt) && contains(mode_set(dt), kt), std::to_string(kt),
                         "median " + join(median_set(dt)) + " mode " + join(mode_set(dt)));
            const auto dp = formula_distribution(c, WordEnsemble::PalindromicWords);
            const int kp = (c % 4 == 1 || c % 4 == 2) ? (c + 3) / 4 : (c + 1) / 4;
            tp_chk.expect(c, kp, contains(median_set(dp), kp) && contains(mode_set(dp), kp), std::to_string(kp),
                          "median " + join(median_set(dp)) + " mode " + join(mode_set(dp)));
        }
        report.add(std::move(t_chk).finish());
        report.add(std::move(tp_chk).finish());
    }
}

inline void verify_golden(VerificationReport& report) {
    CheckBuilder chk("golden table: tbar(c,g) for c = 3..20, errata applied", golden::c_min, golden::c_max);
    for (int c = golden::c_min; c <= golden::c_max; ++c)
        for (int g = 1; g <= 9; ++g) chk.expect_equal(c, g, Count(golden::corrected_value(c, g)), tbar_of(c, g));
    report.add(std::move(chk).finish());
}

} // namespace detail

/// Runs every check. An enumeration bound below 3 yields an empty report.
inline VerificationReport verify_all(int c_enum_max, int c_formula_max, const VerifyOptions& opt = {}) {
    VerificationReport report;
    if (c_enum_max < 3) return report;
    detail::check_cap(c_enum_max, opt.oracle.cap);
    detail::verify_oracle(report, c_enum_max, opt);
    detail::verify_formulas(report, c_formula_max, opt);
    detail::verify_totals(report, opt);
    detail::verify_shape(report, opt);
    detail::verify_golden(report);
    return report;
}

} // namespace bridge_genus
