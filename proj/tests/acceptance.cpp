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


// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include "bridge_genus/io.hpp"
#include "bridge_genus/oracle.hpp"
#include "bridge_genus/golden.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace bg = bridge_genus;

namespace {

// Pinned thresholds.
constexpr double kTableSeconds = 10.0;
constexpr double kVerifySeconds = 60.0;
constexpr double kVarGapAt60 = 1e-8;   // exact value 6.338e-9
constexpr double kMeanGapAt40 = 1e-6;  // exact value 1.589e-7
constexpr double kKsAt163 = 0.1;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double x) { return bg::io::format_double(x); }

bool decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

std::string list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s;
}

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string first_failure(const bg::CheckRecord& r) {
    if (r.passed || !r.first_counterexample) return r.name + " ok";
    const auto& ce = *r.first_counterexample;
    return r.name + " failed at c=" + std::to_string(ce.c) + (ce.g ? ",g=" + std::to_string(*ce.g) : "") +
           " expected " + ce.expected + " got " + ce.actual;
}

Outcome table_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream os;
    bg::io::write_table(os, 3, 20, bg::io::Format::Csv);
    const double secs = seconds_since(t0);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    int matched = 0;
    int reference_cells = 0;
    std::string mismatches;
    while (std::getline(in, line)) {
        int c = 0, g = 0;
        char rest[512] = {};
        if (std::sscanf(line.c_str(), "%d,%d,%511s", &c, &g, rest) != 3) continue;
        const std::string tail(rest);
        const std::string tbar = tail.substr(tail.rfind(',') + 1);
        const auto reference = bg::golden::value(c, g);
        if (reference == 0) continue;
        ++reference_cells;
        if (tbar == std::to_string(reference))
            ++matched;
        else
            mismatches += " (" + std::to_string(c) + "," + std::to_string(g) + "): reference " +
                          std::to_string(reference) + ", computed " + tbar + ";";
    }
    const bool ok = matched == 90 && reference_cells == 90 && secs < kTableSeconds;
    return {ok, std::to_string(matched) + "/90 cells match the reference table in " + num(secs) + " s" +
                    (mismatches.empty() ? "" : "; mismatches:" + mismatches)};
}

Outcome triple_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = bg::verify_all(16, 60);
    const double secs = seconds_since(t0);
    const char* names[] = {"formula vs oracle: t(c,g)",    "formula vs oracle: t_p(c,g)",
                           "formula vs oracle: tbar(c,g)", "closed vs recurrence: t(c,g)",
                           "closed vs recurrence: t_p(c,g)", "closed vs recurrence: tbar(c,g)"};
    bool ok = secs < kVerifySeconds;
    std::string detail;
    for (const char* n : names) {
        const auto* r = report.find(n);
        if (!r || !r->passed) {
            ok = false;
            detail += (r ? first_failure(*r) : std::string(n) + " missing") + "; ";
        }
    }
    return {ok, detail + "closed = recurrence for c <= 60, = enumeration for c <= 16; verify_all(16, 60) took " +
                    num(secs) + " s single-threaded"};
}

Outcome genus_engines() {
    long words = 0;
    long mismatches = 0;
    for (int c = 3; c <= 14; ++c)
        bg::for_each_T(c, [&](const bg::Word& w) {
            ++words;
            int s = -1;
            try {
                s = bg::genus_by_seifert(w);
            } catch (const bg::Error&) {
            }
            if (s != bg::genus_by_reduction(w)) ++mismatches;
        });
    return {mismatches == 0, std::to_string(words) + " words, " + std::to_string(mismatches) + " mismatches"};
}

Outcome totals() {
    bool ok = true;
    std::string detail;
    const auto rec = bg::totals_recursive_table(200);
    for (int c = 3; c <= 16; ++c)
        if (bg::empirical_totals(c) != rec[static_cast<std::size_t>(c)]) {
            ok = false;
            detail += "oracle != recurrence at c=" + std::to_string(c) + "; ";
        }
    for (int c = 4; c <= 200; ++c)
        if (bg::totals_closed(c) != rec[static_cast<std::size_t>(c)]) {
            ok = false;
            detail += "closed != recurrence at c=" + std::to_string(c) + "; ";
        }
    return {ok, detail + "oracle = recurrence for 3 <= c <= 16, recurrence = closed for 4 <= c <= 200"};
}

Outcome median_mode() {
    for (int c = 3; c <= 64; ++c) {
        const auto d = bg::formula_distribution(c, bg::WordEnsemble::KnotClasses);
        const int k = (c + 2) / 4;
        if (!has(bg::median_set(d), k) || !has(bg::mode_set(d), k))
            return {false, "floor((c+2)/4) missing at c=" + std::to_string(c)};
    }
    return {true, "floor((c+2)/4) in median and mode sets for 3 <= c <= 64"};
}

Outcome quasi_symmetry() {
    for (int c = 3; c <= 50; ++c) {
        const auto q = bg::qs_classify(bg::formula_distribution(c, bg::WordEnsemble::KnotClasses));
        const auto want = c % 2 ? bg::QsClass::LeftDominated : bg::QsClass::RightDominated;
        if (q != want && q != bg::QsClass::Both)
            return {false, "c=" + std::to_string(c) + " is " + std::string(bg::to_string(q))};
    }
    return {true, "odd c left-dominated, even c right-dominated for 3 <= c <= 50"};
}

Outcome variance_limit() {
    const std::vector<double> gaps{std::abs(bg::var_gap(20)), std::abs(bg::var_gap(30)), std::abs(bg::var_gap(60))};
    const bool ok = decreasing(gaps) && gaps.back() < kVarGapAt60;
    return {ok, "|var_gap| at c = 20, 30, 60: " + list(gaps) + "; threshold at 60: " + num(kVarGapAt60)};
}

Outcome mean_limit() {
    const std::vector<double> gaps{std::abs(bg::mean_gap(20)), std::abs(bg::mean_gap(40)),
                                   std::abs(bg::mean_gap(80))};
    const bool ok = decreasing(gaps) && gaps[1] < kMeanGapAt40;
    return {ok, "|mean_gap| at c = 20, 40, 80: " + list(gaps) + "; threshold at 40: " + num(kMeanGapAt40)};
}

Outcome identities() {
    const auto report = bg::identity_suite(40);
    for (const char* n : {"identity: t(c,g) = t_p(2c,2g)",
                          "identity: tbar(c,g) = tbar(c-2,g) + tbar(c-2,g-1) + t_p(2c-4,2g-1)"}) {
        const auto* r = report.find(n);
        if (!r) return {false, std::string(n) + " missing"};
        if (!r->passed) return {false, first_failure(*r)};
    }
    return {true, "t(c,g) = t_p(2c,2g) for 3 <= c <= 40, tbar recurrence for 5 <= c <= 40"};
}

Outcome binomial() {
    for (int n = 4; n <= 40; ++n)
        if (const int k = bg::binomial_ratio_violation(n))
            return {false, "ratio order fails at n=" + std::to_string(n) + ", k=" + std::to_string(k)};
    const std::vector<double> tv{bg::binom_tv_distance(4), bg::binom_tv_distance(8), bg::binom_tv_distance(16),
                                 bg::binom_tv_distance(32)};
    return {decreasing(tv), "ratios monotone for 4 <= n <= 40; TV at n = 4, 8, 16, 32: " + list(tv)};
}

Outcome normality() {
    const std::vector<double> ks{bg::ks_to_normal(23), bg::ks_to_normal(43), bg::ks_to_normal(83),
                                 bg::ks_to_normal(163)};
    const bool dec = decreasing(ks);
    const bool below = ks.back() < kKsAt163;
    return {dec && below, "KS at c = 23, 43, 83, 163: " + list(ks) + (dec ? "; decreasing" : "; not decreasing") +
                              "; c=163 " + (below ? "below " : "not below ") + num(kKsAt163)};
}

Outcome harness_honesty() {
    bg::VerifyOptions opt;
    opt.seeds = bg::faulty_seeds_t5g1();
    const auto report = bg::verify_all(16, 60, opt);
    if (report.passed()) return {false, "fault went unnoticed"};
    for (const auto& r : report.records())
        if (!r.passed && r.first_counterexample && r.first_counterexample->g)
            return {true, "t(5,1) := 1 flagged; " + first_failure(r)};
    return {false, "failure recorded without a (c,g) counterexample"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table reproduction", table_reproduction},
        {"triple agreement", triple_agreement},
        {"genus engine independence", genus_engines},
        {"totals", totals},
        {"median and mode", median_mode},
        {"quasi-symmetry", quasi_symmetry},
        {"variance limit", variance_limit},
        {"mean limit", mean_limit},
        {"identity suite", identities},
        {"binomial comparison", binomial},
        {"normality", normality},
        {"harness honesty", harness_honesty},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
