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

// Reference knot counts by crossing number and genus for c = 3..20.

#include <array>
#include <cstdint>

namespace bridge_genus::golden {

inline constexpr int c_min = 3;
inline constexpr int c_max = 20;

struct Row {
    int c;
    std::array<std::uint32_t, 9> tbar; // genus 1..9, zero beyond the range
};

inline constexpr std::array<Row, 18> rows{{
    {3, {1}},
    {4, {1}},
    {5, {1, 1}},
    {6, {1, 2}},
    {7, {2, 4, 1}},
    {8, {2, 7, 3}},
    {9, {2, 12, 9, 1}},
    {10, {2, 18, 21, 4}},
    {11, {3, 26, 45, 16, 1}},
    {12, {3, 36, 85, 47, 5}},
    {13, {3, 49, 151, 123, 25, 1}},
    {14, {3, 64, 251, 280, 89, 6}},
    {15, {4, 82, 400, 588, 276, 36, 1}},
    {16, {4, 103, 610, 1141, 736, 151, 7}},
    {17, {4, 128, 904, 2094, 1784, 542, 49, 1}},
    {18, {4, 156, 1294, 3648, 3960, 1658, 237, 8}},
    {19, {5, 188, 1814, 6104, 8230, 4558, 967, 64, 1}},
    {20, {5, 224, 2486, 9842, 16126, 11394, 3339, 351, 9}},
}};

/// Reference value, or 0 outside the table.
constexpr std::uint32_t value(int c, int g) {
    if (c < c_min || c > c_max || g < 1 || g > 9) return 0;
    return rows[static_cast<std::size_t>(c - c_min)].tbar[static_cast<std::size_t>(g - 1)];
}

struct Erratum {
    int c;
    int g;
    std::uint32_t reference;
    std::uint32_t corrected;
};

// Row 17 of the reference sums to 5506, not |K_17| = 5504. Exhaustive
// enumeration gives 902 knots of genus 3.
inline constexpr std::array<Erratum, 1> errata{{{17, 3, 904, 902}}};

/// Reference value with known errata applied.
constexpr std::uint32_t corrected_value(int c, int g) {
    for (const auto& e : errata)
        if (e.c == c && e.g == g) return e.corrected;
    return value(c, g);
}

} // namespace bridge_genus::golden
