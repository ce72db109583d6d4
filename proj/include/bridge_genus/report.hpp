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

#include "json.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bridge_genus {

struct Counterexample {
    int c = 0;
    std::optional<int> g; // absent for whole-row checks
    std::string expected;
    std::string actual;
};

struct CheckRecord {
    std::string name;
    int c_min = 0;
    int c_max = 0;
    bool passed = true;
    std::size_t cases = 0;
    std::optional<Counterexample> first_counterexample;
};

class VerificationReport {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }

    void append(const VerificationReport& other) {
        records_.insert(records_.end(), other.records_.begin(), other.records_.end());
    }

    bool passed() const {
        return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.passed; });
    }

    const std::vector<CheckRecord>& records() const noexcept { return records_; }

    const CheckRecord* find(const std::string& name) const {
        for (const auto& r : records_)
            if (r.name == name) return &r;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& r : records_) {
            nlohmann::ordered_json j;
            j["name"] = r.name;
            j["c_range"] = {r.c_min, r.c_max};
            j["status"] = r.passed ? "pass" : "fail";
            j["cases"] = r.cases;
            if (r.first_counterexample) {
                const auto& ce = *r.first_counterexample;
                nlohmann::ordered_json cj;
                cj["c"] = ce.c;
                if (ce.g) cj["g"] = *ce.g;
                cj["expected"] = ce.expected;
                cj["actual"] = ce.actual;
                j["first_counterexample"] = std::move(cj);
            }
            checks.push_back(std::move(j));
        }
        nlohmann::ordered_json out;
        out["status"] = passed() ? "pass" : "fail";
        out["check_count"] = records_.size();
        out["checks"] = std::move(checks);
        return out;
    }

private:
    std::vector<CheckRecord> records_;
};

/// Accumulates one named check over many cases, remembering the first
/// failure.
class CheckBuilder {
public:
    CheckBuilder(std::string name, int c_min, int c_max) {
        rec_.name = std::move(name);
        rec_.c_min = c_min;
        rec_.c_max = c_max;
    }

    template <typename A, typename B>
    bool expect_equal(int c, std::optional<int> g, const A& expected, const B& actual) {
        ++rec_.cases;
        if (expected == actual) return true;
        fail(c, g, to_text(expected), to_text(actual));
        return false;
    }

    bool expect(int c, std::optional<int> g, bool ok, const std::string& expected = "true",
                const std::string& actual = "false") {
        ++rec_.cases;
        if (!ok) fail(c, g, expected, actual);
        return ok;
    }

    CheckRecord finish() && { return std::move(rec_); }

private:
    template <typename T>
    static std::string to_text(const T& v) {
        if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(v);
        else if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(v);
        else
            return v.str();
    }

    void fail(int c, std::optional<int> g, std::string expected, std::string actual) {
        if (rec_.passed) rec_.first_counterexample = Counterexample{c, g, std::move(expected), std::move(actual)};
        rec_.passed = false;
    }

    CheckRecord rec_;
};

} // namespace bridge_genus
