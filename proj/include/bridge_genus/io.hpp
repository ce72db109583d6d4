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

// Record builders and writers shared by the command-line tool and tests.

#include "bridge_genus/counts.hpp"
#include "bridge_genus/exact.hpp"
#include "bridge_genus/genus.hpp"
#include "bridge_genus/report.hpp"
#include "bridge_genus/stats.hpp"
#include "bridge_genus/word.hpp"

#include "json.hpp"

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bridge_genus::io {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json, Jsonl };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "jsonl") return Format::Jsonl;
    return std::nullopt;
}

/// 17 significant digits.
inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Compact JSON with floats reference by format_double.
inline void write_json(std::ostream& os, const Json& j) {
    switch (j.type()) {
    case Json::value_t::object: {
        os << '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) os << ',';
            first = false;
            os << Json(k).dump() << ':';
            write_json(os, v);
        }
        os << '}';
        break;
    }
    case Json::value_t::array: {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ',';
            write_json(os, j[i]);
        }
        os << ']';
        break;
    }
    case Json::value_t::number_float: os << format_double(j.get<double>()); break;
    default: os << j.dump();
    }
}

inline std::string json_text(const Json& j) {
    std::ostringstream os;
    write_json(os, j);
    return os.str();
}

inline std::string csv_escape(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline std::string csv_cell(const Json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
        return csv_escape(s);
    }
    if (v.is_object() || v.is_null()) return csv_escape(v.is_null() ? "" : json_text(v));
    return v.dump();
}

/// A list of flat records with a fixed column order.
struct Records {
    std::vector<std::string> columns;
    std::vector<Json> rows;
};

inline void write_csv_header(std::ostream& os, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& columns, const Json& row) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        if (row.contains(columns[i])) os << csv_cell(row.at(columns[i]));
    }
    os << '\n';
}

/// CSV with header, a single JSON array, or one JSON object per line.
inline void write_records(std::ostream& os, const Records& r, Format f) {
    switch (f) {
    case Format::Csv:
        write_csv_header(os, r.columns);
        for (const auto& row : r.rows) write_csv_row(os, r.columns, row);
        break;
    case Format::Json: {
        Json arr = Json::array();
        for (const auto& row : r.rows) arr.push_back(row);
        write_json(os, arr);
        os << '\n';
        break;
    }
    case Format::Jsonl:
        for (const auto& row : r.rows) {
            write_json(os, row);
            os << '\n';
        }
        break;
    }
}

// ---------------------------------------------------------------------------
// Record builders

inline const std::vector<std::string>& word_columns(bool with_multiplicity) {
    static const std::vector<std::string> plain{"c", "eps", "symbols", "palindromic", "genus"};
    static const std::vector<std::string> dedup{"c", "eps", "symbols", "palindromic", "genus", "multiplicity"};
    return with_multiplicity ? dedup : plain;
}

inline Json word_record(const Word& w, std::optional<int> multiplicity = std::nullopt) {
    Json j;
    j["c"] = w.crossings();
    Json eps = Json::array();
    for (auto e : w.eps()) eps.push_back(static_cast<int>(e));
    j["eps"] = std::move(eps);
    j["symbols"] = to_symbols(w);
    j["palindromic"] = is_palindromic_type(w);
    j["genus"] = genus_by_reduction(w);
    if (multiplicity) j["multiplicity"] = *multiplicity;
    return j;
}

/// eps as a digit string in CSV, e.g. "12221".
inline void write_word(std::ostream& os, const Word& w, Format f, std::optional<int> multiplicity) {
    Json j = word_record(w, multiplicity);
    if (f == Format::Csv) {
        std::string digits;
        for (auto e : w.eps()) digits += static_cast<char>('0' + e);
        j["eps"] = digits;
        write_csv_row(os, word_columns(multiplicity.has_value()), j);
    } else {
        write_json(os, j);
        os << '\n';
    }
}

inline const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> cols{"c", "g", "t", "tp", "tbar"};
    return cols;
}

/// Counts are decimal strings in JSON so they never lose precision; CSV
/// carries them as bare integers.
inline void write_table(std::ostream& os, const std::vector<int>& crossings, Format f) {
    if (f == Format::Csv) write_csv_header(os, table_columns());
    Json arr = Json::array();
    for (int c : crossings) {
        for (int g = 1; g <= max_genus(c); ++g) {
            if (f == Format::Csv) {
                os << c << ',' << g << ',' << t_of(c, g).str() << ',' << tp_of(c, g).str() << ','
                   << tbar_of(c, g).str() << '\n';
                continue;
            }
            Json j;
            j["c"] = c;
            j["g"] = g;
            j["t"] = t_of(c, g).str();
            j["tp"] = tp_of(c, g).str();
            j["tbar"] = tbar_of(c, g).str();
            if (f == Format::Jsonl) {
                write_json(os, j);
                os << '\n';
            } else {
                arr.push_back(std::move(j));
            }
        }
    }
    if (f == Format::Json) {
        write_json(os, arr);
        os << '\n';
    }
}

inline void write_table(std::ostream& os, int c_min, int c_max, Format f) {
    std::vector<int> cs;
    for (int c = std::max(c_min, 3); c <= c_max; ++c) cs.push_back(c);
    write_table(os, cs, f);
}

inline const std::vector<std::string>& stats_columns() {
    static const std::vector<std::string> cols{"c",        "ensemble", "counts",   "mean",   "variance",
                                               "median_set", "mode_set", "qs_class", "mean_gap", "var_gap",
                                               "ks_to_normal"};
    return cols;
}

/// The per-c statistics document. The gap and normality diagnostics always
/// refer to the knot ensemble; ks_to_normal is null below c = 5.
inline Json stats_record(const GenusDistribution& d) {
    const SummaryStats s = summarize(d);
    Json j;
    j["c"] = d.c;
    j["ensemble"] = std::string(to_string(d.ensemble));
    Json counts = Json::object();
    for (int g = 1; g <= d.genus_range(); ++g) counts[std::to_string(g)] = d.count(g).str();
    j["counts"] = std::move(counts);
    j["mean"] = to_string(s.mean);
    j["variance"] = to_string(s.variance);
    j["median_set"] = s.median_set;
    j["mode_set"] = s.mode_set;
    j["qs_class"] = std::string(to_string(s.qs_class));
    j["mean_gap"] = mean_gap(d.c);
    j["var_gap"] = var_gap(d.c);
    if (d.c >= 5) j["ks_to_normal"] = ks_to_normal(d.c);
    else j["ks_to_normal"] = nullptr;
    return j;
}

inline const std::vector<std::string>& normality_columns() {
    static const std::vector<std::string> cols{"c", "ks_to_normal", "binom_n", "binom_tv", "mean_gap", "var_gap"};
    return cols;
}

/// binom_n = floor((c-3)/2), the binomial index paired with c.
inline Json normality_record(int c) {
    const int n = (c - 3) / 2;
    Json j;
    j["c"] = c;
    j["ks_to_normal"] = ks_to_normal(c);
    j["binom_n"] = n;
    j["binom_tv"] = binom_tv_distance(n);
    j["mean_gap"] = mean_gap(c);
    j["var_gap"] = var_gap(c);
    return j;
}

inline const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols{"name", "c_min", "c_max", "status", "cases", "counterexample_c",
                                               "counterexample_g", "expected", "actual"};
    return cols;
}

inline Records report_records(const VerificationReport& r) {
    Records out{report_columns(), {}};
    for (const auto& rec : r.records()) {
        Json j;
        j["name"] = rec.name;
        j["c_min"] = rec.c_min;
        j["c_max"] = rec.c_max;
        j["status"] = rec.passed ? "pass" : "fail";
        j["cases"] = rec.cases;
        if (rec.first_counterexample) {
            const auto& ce = *rec.first_counterexample;
            j["counterexample_c"] = ce.c;
            if (ce.g) j["counterexample_g"] = *ce.g;
            j["expected"] = ce.expected;
            j["actual"] = ce.actual;
        }
        out.rows.push_back(std::move(j));
    }
    return out;
}

} // namespace bridge_genus::io
