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

// Exact counts of words and knots by crossing number c and genus g.
//
//   t(c, g)     words of T(c) with genus g
//   t_p(c, g)   palindromic words of T_p(c) with genus g
//   tbar(c, g)  knots with crossing number c and genus g, (t + t_p) / 2
//
// Each count is available as a closed-form alternating binomial sum and as a
// bottom-up recurrence table; the two are independent routes to the same
// numbers.

#include "bridge_genus/error.hpp"
#include "bridge_genus/exact.hpp"
#include "bridge_genus/report.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace bridge_genus {

/// Largest genus of a knot with c crossings.
constexpr int max_genus(int c) noexcept { return (c - 1) / 2; }

// ---------------------------------------------------------------------------
// Totals

/// |T(c)| = (2^(c-2) - (-1)^c) / 3.
inline Count t_total(int c) {
    return (pow2(static_cast<unsigned>(c - 2)) - sign_pow(c)) / 3;
}

/// |T_p(c)| = (2^m - (-1)^m) / 3 with m = floor((c-1)/2).
inline Count tp_total(int c) {
    const int m = (c - 1) / 2;
    return (pow2(static_cast<unsigned>(m)) - sign_pow(m)) / 3;
}

/// Number of 2-bridge knots with c crossings, mirror images identified.
inline Count knots_total(int c) {
    if (c < 3) return 0;
    const Count base = pow2(static_cast<unsigned>(c - 3));
    switch (c % 4) {
    case 0: return (base + pow2(static_cast<unsigned>((c - 4) / 2))) / 3;
    case 1: return (base + pow2(static_cast<unsigned>((c - 3) / 2))) / 3;
    case 2: return (base + pow2(static_cast<unsigned>((c - 4) / 2)) - 1) / 3;
    default: return (base + pow2(static_cast<unsigned>((c - 3) / 2)) + 1) / 3;
    }
}

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {

/// sum_{n=0}^{upper} (-1)^n C(n + k, n); zero when upper < 0.
inline SignedAccumulator alternating_binomial_sum(long long upper, long long k) {
    SignedAccumulator acc = 0;
    if (upper < 0) return acc;
    Count term = 1; // C(k, 0)
    for (long long n = 0; n <= upper; ++n) {
        if (n % 2 == 0)
            acc += term;
        else
            acc -= term;
        term *= (n + 1 + k);
        term /= (n + 1);
    }
    return acc;
}

} // namespace detail

inline Count t_of(int c, int g) {
    if (g < 1) return 0;
    const long long upper = static_cast<long long>(c) - 2LL * g - 1;
    return sign_pow(c - 1) * detail::alternating_binomial_sum(upper, 2LL * g - 1);
}

/// c' = floor((c+1)/2): c/2 for even c, (c+1)/2 for odd c.
constexpr int half_crossings(int c) noexcept { return (c + 1) / 2; }

inline Count tp_of(int c, int g) {
    if (g < 1) return 0;
    const long long upper = static_cast<long long>(half_crossings(c)) - g - 1;
    return sign_pow(upper) * detail::alternating_binomial_sum(upper, static_cast<long long>(g) - 1);
}

inline Count tbar_of(int c, int g) {
    if (g < 1 || g > max_genus(c)) return 0;
    const Count sum = t_of(c, g) + tp_of(c, g);
    if (bit_test(sum, 0))
        throw Error(ErrorCode::OddSum, "t + t_p is odd at c=" + std::to_string(c) + ", g=" + std::to_string(g));
    return sum / 2;
}

// ---------------------------------------------------------------------------
// Small-genus closed forms

enum class SmallGenus { TpGenus1, TpGenus2, TpGenus3, TGenus1, TbarGenus1 };

constexpr std::string_view to_string(SmallGenus s) noexcept {
    switch (s) {
    case SmallGenus::TpGenus1: return "tp(c,1)";
    case SmallGenus::TpGenus2: return "tp(c,2)";
    case SmallGenus::TpGenus3: return "tp(c,3)";
    case SmallGenus::TGenus1: return "t(c,1)";
    case SmallGenus::TbarGenus1: return "tbar(c,1)";
    }
    return "?";
}

inline Count small_genus(int c, SmallGenus which) {
    switch (which) {
    case SmallGenus::TpGenus1: return (c % 4 == 1 || c % 4 == 2) ? 0 : 1;
    case SmallGenus::TpGenus2: return floor_div(c - 1, 4);
    case SmallGenus::TpGenus3: {
        const long long a = floor_div(c - 5, 2);
        const long long b = floor_div(c - 1, 2);
        return Count(2 * a * b - sign_pow(b) + 1) / 8;
    }
    case SmallGenus::TGenus1: return floor_div(c - 1, 2);
    case SmallGenus::TbarGenus1: return floor_div(c + 1, 4);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Recurrence tables, filled bottom-up

/// Base rows c = 3, 4, 5 for the t(c, g) recurrence.
struct TSeeds {
    Count t3g1 = 1;
    Count t4g1 = 1;
    Count t5g1 = 2;
    Count t5g2 = 1;
};

class CountTable {
public:
    CountTable() = default;
    explicit CountTable(int c_max) : c_max_(c_max), rows_(static_cast<std::size_t>(std::max(c_max, 0) + 1)) {
        for (int c = 0; c <= c_max; ++c) rows_[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(c + 1), 0);
    }

    int c_max() const noexcept { return c_max_; }

    /// Zero outside 3 <= c <= c_max, 1 <= g <= c.
    Count operator()(int c, int g) const {
        if (c < 3 || c > c_max_ || g < 1 || g > c) return 0;
        return rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
    }

    Count& at(int c, int g) { return rows_.at(static_cast<std::size_t>(c)).at(static_cast<std::size_t>(g)); }

private:
    int c_max_ = 0;
    std::vector<std::vector<Count>> rows_;
};

/// t(c,g) = t(c-1,g) + t(c-2,g-1) + t(c-2,g) + t(c-3,g-1) - t(c-3,g).
inline CountTable t_recurrence_table(int c_max, const TSeeds& seeds = {}) {
    CountTable t(c_max);
    if (c_max >= 3) t.at(3, 1) = seeds.t3g1;
    if (c_max >= 4) t.at(4, 1) = seeds.t4g1;
    if (c_max >= 5) {
        t.at(5, 1) = seeds.t5g1;
        t.at(5, 2) = seeds.t5g2;
    }
    for (int c = 6; c <= c_max; ++c)
        for (int g = 1; g <= c; ++g)
            t.at(c, g) = t(c - 1, g) + t(c - 2, g - 1) + t(c - 2, g) + t(c - 3, g - 1) - t(c - 3, g);
    return t;
}

/// t_p(c,g) = t_p(c-2,g-1) + t_p(c-4,g) + t_p(c-4,g-1), base rows c = 3..6.
inline CountTable tp_recurrence_table(int c_max) {
    CountTable tp(c_max);
    if (c_max >= 3) tp.at(3, 1) = 1;
    if (c_max >= 4) tp.at(4, 1) = 1;
    if (c_max >= 5) tp.at(5, 2) = 1;
    if (c_max >= 6) tp.at(6, 2) = 1;
    for (int c = 7; c <= c_max; ++c)
        for (int g = 1; g <= c; ++g) tp.at(c, g) = tp(c - 2, g - 1) + tp(c - 4, g) + tp(c - 4, g - 1);
    return tp;
}

/// tbar(c,g) = tbar(c-2,g) + tbar(c-2,g-1) + t_p(2c-4, 2g-1) for c >= 5,
/// g >= 2; the g = 1 column is floor((c+1)/4) and rows 3, 4 are single knots.
/// `tp` must reach crossing number 2 * c_max - 4.
inline CountTable tbar_recurrence_table(int c_max, const CountTable& tp) {
    if (c_max >= 5 && tp.c_max() < 2 * c_max - 4)
        throw Error(ErrorCode::InvalidArgument, "palindromic table too small for tbar recurrence");
    CountTable tb(c_max);
    if (c_max >= 3) tb.at(3, 1) = 1;
    if (c_max >= 4) tb.at(4, 1) = 1;
    for (int c = 5; c <= c_max; ++c) {
        tb.at(c, 1) = small_genus(c, SmallGenus::TbarGenus1);
        for (int g = 2; g <= c; ++g) tb.at(c, g) = tb(c - 2, g) + tb(c - 2, g - 1) + tp(2 * c - 4, 2 * g - 1);
    }
    return tb;
}

/// Single lookups; each call builds its own table.
inline Count t_of_rec(int c, int g) { return t_recurrence_table(c)(c, g); }
inline Count tp_of_rec(int c, int g) { return tp_recurrence_table(c)(c, g); }

// ---------------------------------------------------------------------------
// Identities between the closed forms

inline VerificationReport identity_suite(int c_max) {
    if (c_max < 7) throw Error(ErrorCode::InvalidArgument, "identity suite needs c_max >= 7");
    VerificationReport report;

    {
        CheckBuilder chk("identity: t(c,g) = t_p(2c,2g)", 3, c_max);
        for (int c = 3; c <= c_max; ++c)
            for (int g = 1; g <= max_genus(c) + 1; ++g) chk.expect_equal(c, g, t_of(c, g), tp_of(2 * c, 2 * g));
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder chk("identity: tbar(c,g) = tbar(c-2,g) + tbar(c-2,g-1) + t_p(2c-4,2g-1)", 5, c_max);
        for (int c = 5; c <= c_max; ++c)
            for (int g = 2; g <= max_genus(c) + 1; ++g)
                chk.expect_equal(c, g, tbar_of(c, g),
                                 Count(tbar_of(c - 2, g) + tbar_of(c - 2, g - 1) + tp_of(2 * c - 4, 2 * g - 1)));
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder chk("identity: t_p(c,g) = t_p(c-2,g) + t_p(c-2,g-1)", 5, c_max);
        for (int c = 5; c <= c_max; ++c)
            for (int g = 2; g <= max_genus(c) + 1; ++g)
                chk.expect_equal(c, g, tp_of(c, g), Count(tp_of(c - 2, g) + tp_of(c - 2, g - 1)));
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder chk("identity: t_p(c,g) = t_p(c+1,g) for odd c", 3, c_max);
        for (int c = 3; c <= c_max; c += 2)
            for (int g = 1; g <= max_genus(c) + 1; ++g) chk.expect_equal(c, g, tp_of(c, g), tp_of(c + 1, g));
        report.add(std::move(chk).finish());
    }
    {
        CheckBuilder t_sum("row sum: sum_g t(c,g) = t(c)", 3, c_max);
        CheckBuilder tp_sum("row sum: sum_g t_p(c,g) = t_p(c)", 3, c_max);
        CheckBuilder tbar_sum("row sum: sum_g tbar(c,g) = |K_c|", 3, c_max);
        CheckBuilder halves("2 tbar(c,g) = t(c,g) + t_p(c,g)", 3, c_max);
        for (int c = 3; c <= c_max; ++c) {
            Count st = 0, sp = 0, sb = 0;
            for (int g = 1; g <= max_genus(c); ++g) {
                st += t_of(c, g);
                sp += tp_of(c, g);
                sb += tbar_of(c, g);
                halves.expect_equal(c, g, Count(2 * tbar_of(c, g)), Count(t_of(c, g) + tp_of(c, g)));
            }
            t_sum.expect_equal(c, std::nullopt, t_total(c), st);
            tp_sum.expect_equal(c, std::nullopt, tp_total(c), sp);
            tbar_sum.expect_equal(c, std::nullopt, knots_total(c), sb);
        }
        report.add(std::move(t_sum).finish());
        report.add(std::move(tp_sum).finish());
        report.add(std::move(tbar_sum).finish());
        report.add(std::move(halves).finish());
    }
    {
        CheckBuilder chk("small-genus closed forms", 3, c_max);
        for (int c = 3; c <= c_max; ++c) {
            chk.expect_equal(c, 1, tp_of(c, 1), small_genus(c, SmallGenus::TpGenus1));
            chk.expect_equal(c, 2, tp_of(c, 2), small_genus(c, SmallGenus::TpGenus2));
            chk.expect_equal(c, 3, tp_of(c, 3), small_genus(c, SmallGenus::TpGenus3));
            chk.expect_equal(c, 1, t_of(c, 1), small_genus(c, SmallGenus::TGenus1));
            chk.expect_equal(c, 1, tbar_of(c, 1), small_genus(c, SmallGenus::TbarGenus1));
        }
        report.add(std::move(chk).finish());
    }
    return report;
}

} // namespace bridge_genus
