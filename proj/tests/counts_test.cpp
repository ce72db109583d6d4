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


#include "bridge_genus/counts.hpp"
#include "bridge_genus/golden.hpp"

#include <gtest/gtest.h>

namespace bg = bridge_genus;
using bg::Count;

TEST(Totals, WordAndKnotCounts) {
    EXPECT_EQ(bg::t_total(3), 1);
    EXPECT_EQ(bg::t_total(7), 11);
    EXPECT_EQ(bg::t_total(16), 5461);
    EXPECT_EQ(bg::tp_total(7), 3);
    EXPECT_EQ(bg::tp_total(6), 1);
    EXPECT_EQ(bg::knots_total(3), 1);
    EXPECT_EQ(bg::knots_total(7), 7);
    EXPECT_EQ(bg::knots_total(20), 43776);
    EXPECT_EQ(bg::knots_total(21), 87552);
    EXPECT_EQ(bg::knots_total(100), Count("52818775009509652220688203776"));
    for (int c = 3; c <= 80; ++c) EXPECT_EQ(2 * bg::knots_total(c), bg::t_total(c) + bg::tp_total(c)) << c;
}

TEST(ClosedForms, SmallValues) {
    EXPECT_EQ(bg::t_of(3, 1), 1);
    EXPECT_EQ(bg::t_of(5, 1), 2);
    EXPECT_EQ(bg::t_of(5, 2), 1);
    EXPECT_EQ(bg::tp_of(5, 1), 0);
    EXPECT_EQ(bg::tp_of(5, 2), 1);
    EXPECT_EQ(bg::tp_of(6, 1), 0);
    EXPECT_EQ(bg::tp_of(6, 2), 1);
    EXPECT_EQ(bg::t_of(7, 0), 0);
    EXPECT_EQ(bg::t_of(7, 4), 0);
    EXPECT_EQ(bg::tbar_of(7, 4), 0);
}

// Frozen from an independent big-integer evaluation of the recurrences.
TEST(ClosedForms, LargeValues) {
    EXPECT_EQ(bg::t_of(60, 15), Count("20006004927939196"));
    EXPECT_EQ(bg::tp_of(60, 15), Count("26635774"));
    EXPECT_EQ(bg::tbar_of(60, 15), Count("10003002477287485"));
    EXPECT_EQ(bg::t_of(300, 75),
              Count("15673021028557517024026217720764949111520969902146034319269360270057595261383894649835096"));
    EXPECT_EQ(bg::tbar_of(300, 75),
              Count("7836510514278758512013108860382474555760484958854566412191381655923139572494911543406860"));
    EXPECT_EQ(bg::tp_of(300, 70), Count("10879156827976831694308602076334570317566592"));
}

TEST(ClosedForms, NonNegativeAndParityOfSum) {
    for (int c = 3; c <= 120; ++c)
        for (int g = 1; g <= bg::max_genus(c); ++g) {
            EXPECT_GE(bg::t_of(c, g), 0);
            EXPECT_GE(bg::tp_of(c, g), 0);
            EXPECT_LE(bg::tp_of(c, g), bg::t_of(c, g));
            EXPECT_NO_THROW(bg::tbar_of(c, g));
        }
}

TEST(ClosedForms, ZeroBeyondMaxGenus) {
    for (int c = 3; c <= 60; ++c)
        for (int g = bg::max_genus(c) + 1; g <= c; ++g) {
            EXPECT_EQ(bg::t_of(c, g), 0) << c << "," << g;
            EXPECT_EQ(bg::tp_of(c, g), 0) << c << "," << g;
        }
}

TEST(ClosedForms, ReferenceKnotTable) {
    int cells = 0;
    for (int c = bg::golden::c_min; c <= bg::golden::c_max; ++c)
        for (int g = 1; g <= 9; ++g) {
            const auto v = bg::golden::corrected_value(c, g);
            EXPECT_EQ(bg::tbar_of(c, g), Count(v)) << c << "," << g;
            cells += v != 0;
        }
    EXPECT_EQ(cells, 90);
}

TEST(Recurrences, MatchClosedFormsThroughC60) {
    const auto t = bg::t_recurrence_table(60);
    const auto tp = bg::tp_recurrence_table(116);
    const auto tb = bg::tbar_recurrence_table(60, tp);
    for (int c = 3; c <= 60; ++c)
        for (int g = 1; g <= c; ++g) {
            ASSERT_EQ(t(c, g), bg::t_of(c, g)) << c << "," << g;
            ASSERT_EQ(tp(c, g), bg::tp_of(c, g)) << c << "," << g;
            ASSERT_EQ(tb(c, g), bg::tbar_of(c, g)) << c << "," << g;
        }
    EXPECT_EQ(bg::t_of_rec(20, 5), bg::t_of(20, 5));
    EXPECT_EQ(bg::tp_of_rec(21, 4), bg::tp_of(21, 4));
}

TEST(Recurrences, BadSeedBreaksRowSum) {
    bg::TSeeds seeds;
    seeds.t5g1 = 1;
    const auto t = bg::t_recurrence_table(10, seeds);
    Count row = 0;
    for (int g = 1; g <= 5; ++g) row += t(5, g);
    EXPECT_NE(row, bg::t_total(5));
}

TEST(Recurrences, TbarNeedsLongPalindromicTable) {
    try {
        bg::tbar_recurrence_table(20, bg::tp_recurrence_table(20));
        FAIL();
    } catch (const bg::Error& e) {
        EXPECT_EQ(e.code(), bg::ErrorCode::InvalidArgument);
    }
}

TEST(SmallGenus, MatchesClosedForms) {
    for (int c = 3; c <= 100; ++c) {
        EXPECT_EQ(bg::small_genus(c, bg::SmallGenus::TpGenus1), bg::tp_of(c, 1)) << c;
        EXPECT_EQ(bg::small_genus(c, bg::SmallGenus::TpGenus2), bg::tp_of(c, 2)) << c;
        EXPECT_EQ(bg::small_genus(c, bg::SmallGenus::TpGenus3), bg::tp_of(c, 3)) << c;
        EXPECT_EQ(bg::small_genus(c, bg::SmallGenus::TGenus1), bg::t_of(c, 1)) << c;
        EXPECT_EQ(bg::small_genus(c, bg::SmallGenus::TbarGenus1), bg::tbar_of(c, 1)) << c;
    }
}

TEST(Identities, SuitePassesThroughC60) {
    const auto report = bg::identity_suite(60);
    EXPECT_TRUE(report.passed());
    EXPECT_GE(report.records().size(), 8U);
    for (const auto& r : report.records()) EXPECT_TRUE(r.passed) << r.name;
}

TEST(Identities, SuiteRejectsShortRange) { EXPECT_THROW(bg::identity_suite(6), bg::Error); }

// One knot of top genus for odd c; for even c the top row is (c-2)/2.
TEST(ClosedForms, TopGenusDiagonal) {
    for (int c = 5; c <= 60; ++c) {
        const Count want = c % 2 ? 1 : (c - 2) / 2;
        EXPECT_EQ(bg::tbar_of(c, bg::max_genus(c)), want) << c;
        EXPECT_EQ(bg::tbar_of(c, bg::max_genus(c) + 1), 0) << c;
    }
}
