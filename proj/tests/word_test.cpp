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


#include "bridge_genus/word.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace bg = bridge_genus;

namespace {

bg::ErrorCode code_of(const std::vector<int>& eps) {
    try {
        bg::make_word(eps);
    } catch (const bg::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return bg::ErrorCode::InvalidArgument;
}

// Every +/- string of the right length that starts with '+', filtered by
// run lengths; independent of the bitmask scan.
std::vector<std::vector<int>> naive_T(int c) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    for (int len = c; len <= 2 * c; ++len) {
        if (len % 3 != 1) continue;
        for (unsigned long long m = 0; m < (1ULL << (len - 1)); ++m) {
            std::string s = "+";
            for (int i = 0; i < len - 1; ++i) s += ((m >> i) & 1) ? '+' : '-';
            std::vector<int> runs;
            for (std::size_t i = 0; i < s.size();) {
                std::size_t j = i;
                while (j < s.size() && s[j] == s[i]) ++j;
                runs.push_back(static_cast<int>(j - i));
                i = j;
            }
            if (static_cast<int>(runs.size()) != c) continue;
            if (runs.front() != 1 || runs.back() != 1) continue;
            if (std::any_of(runs.begin(), runs.end(), [](int r) { return r > 2; })) continue;
            if (seen.insert(runs).second) out.push_back(runs);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> as_ints(const bg::Word& w) { return {w.eps().begin(), w.eps().end()}; }

} // namespace

TEST(Word, ValidatesRuns) {
    EXPECT_EQ(code_of({1, 2}), bg::ErrorCode::TooFewRuns);
    EXPECT_EQ(code_of({1, 3, 1}), bg::ErrorCode::RunOutOfRange);
    EXPECT_EQ(code_of({1, 0, 1}), bg::ErrorCode::RunOutOfRange);
    EXPECT_EQ(code_of({2, 1, 1}), bg::ErrorCode::EndRunNotSingle);
    EXPECT_EQ(code_of({1, 1, 2}), bg::ErrorCode::EndRunNotSingle);
    EXPECT_EQ(code_of({1, 1, 1}), bg::ErrorCode::LengthModViolation);
    EXPECT_NO_THROW(bg::make_word({1, 2, 1}));
    EXPECT_NO_THROW(bg::make_word({1, 1, 1, 1}));
}

TEST(Word, BasicAccessors) {
    const auto w = bg::make_word({1, 1, 2, 2, 1});
    EXPECT_EQ(w.crossings(), 5);
    EXPECT_EQ(w.length(), 7);
    EXPECT_EQ(w[2], 2);
}

TEST(Word, ReversalAndPalindromes) {
    const auto w = bg::make_word({1, 1, 2, 2, 1});
    EXPECT_EQ(bg::reversal_partner(w), bg::make_word({1, 2, 2, 1, 1}));
    EXPECT_FALSE(bg::is_palindromic_type(w));
    EXPECT_TRUE(bg::is_palindromic_type(bg::make_word({1, 2, 1, 2, 1})));
    EXPECT_TRUE(bg::is_palindromic_type(bg::make_word({1, 2, 2, 2, 2, 1})));
}

TEST(Word, SymbolsRoundTrip) {
    const auto w = bg::make_word({1, 1, 2, 2, 2, 1, 1});
    EXPECT_EQ(bg::to_symbols(w), "+-++--++-+");
    EXPECT_EQ(bg::parse_symbols("+-++--++-+"), w);
    EXPECT_EQ(bg::parse_symbols("+−−+−−+"), bg::make_word({1, 2, 1, 2, 1}));
    EXPECT_THROW(bg::parse_symbols("-+-"), bg::Error);
    EXPECT_THROW(bg::parse_symbols("+-x"), bg::Error);
    for (int c = 3; c <= 10; ++c)
        for (const auto& v : bg::enumerate_T(c)) EXPECT_EQ(bg::parse_symbols(bg::to_symbols(v)), v);
}

TEST(Enumeration, SizesFollowJacobsthal) {
    for (int c = 3; c <= 20; ++c) {
        const long long expected = ((1LL << (c - 2)) + (c % 2 ? 1 : -1)) / 3;
        EXPECT_EQ(static_cast<long long>(bg::enumerate_T(c).size()), expected) << c;
    }
}

TEST(Enumeration, MatchesNaiveStringScan) {
    for (int c = 3; c <= 11; ++c) {
        std::vector<std::vector<int>> got;
        for (const auto& w : bg::enumerate_T(c)) got.push_back(as_ints(w));
        EXPECT_EQ(got, naive_T(c)) << "c=" << c;
    }
}

TEST(Enumeration, KnownSmallSets) {
    EXPECT_EQ(bg::enumerate_T(3), std::vector{bg::make_word({1, 2, 1})});
    EXPECT_EQ(bg::enumerate_T(4), std::vector{bg::make_word({1, 1, 1, 1})});
    EXPECT_EQ(bg::enumerate_T(5).size(), 3U);
    EXPECT_EQ(bg::enumerate_T(7).size(), 11U);
    EXPECT_EQ(bg::enumerate_Tp(7).size(), 3U);
    EXPECT_EQ(bg::enumerate_Tp(6), std::vector{bg::make_word({1, 2, 2, 2, 2, 1})});
}

TEST(Enumeration, LexicographicOrder) {
    for (int c = 3; c <= 14; ++c) {
        const auto ws = bg::enumerate_T(c);
        EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end())) << c;
        const auto ps = bg::enumerate_Tp(c);
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end())) << c;
    }
}

TEST(Enumeration, PalindromesAreTheFixedPoints) {
    for (int c = 3; c <= 16; ++c) {
        std::vector<bg::Word> filtered;
        for (const auto& w : bg::enumerate_T(c))
            if (bg::is_palindromic_type(w)) filtered.push_back(w);
        EXPECT_EQ(filtered, bg::enumerate_Tp(c)) << c;
    }
}

TEST(Enumeration, ShardsPartitionTheScan) {
    for (int c : {5, 9, 14}) {
        const auto full = bg::enumerate_T(c);
        for (unsigned bits : {1U, 2U, 3U, 5U}) {
            std::vector<bg::Word> joined;
            for (std::uint64_t i = 0; i < (1ULL << bits); ++i)
                bg::for_each_T(c, [&](const bg::Word& w) { joined.push_back(w); }, {}, {bits, i});
            EXPECT_EQ(joined, full) << "c=" << c << " bits=" << bits;
        }
    }
}

TEST(Enumeration, ClassRepsCoverEveryWordOnce) {
    for (int c = 3; c <= 16; ++c) {
        const auto reps = bg::canonical_class_reps(c);
        std::size_t words = 0;
        for (const auto& r : reps) {
            words += static_cast<std::size_t>(r.multiplicity);
            EXPECT_LE(r.word, bg::reversal_partner(r.word));
            EXPECT_EQ(r.multiplicity, bg::is_palindromic_type(r.word) ? 1 : 2);
        }
        EXPECT_EQ(words, bg::enumerate_T(c).size()) << c;
    }
    const auto four = bg::canonical_class_reps(4);
    ASSERT_EQ(four.size(), 1U);
    EXPECT_EQ(four[0].multiplicity, 1);
}

TEST(Enumeration, ClassCountMatchesKnotCount) {
    for (int c = 3; c <= 20; ++c) {
        std::size_t reps = 0;
        std::size_t singles = 0;
        bg::for_each_class_rep(c, [&](const bg::ClassRep& r) {
            ++reps;
            singles += r.multiplicity == 1;
        });
        // |K_c| from the closed count, written out here to stay independent.
        const long long base = 1LL << (c - 3);
        long long k = 0;
        switch (c % 4) {
        case 0: k = (base + (1LL << ((c - 4) / 2))) / 3; break;
        case 1: k = (base + (1LL << ((c - 3) / 2))) / 3; break;
        case 2: k = (base + (1LL << ((c - 4) / 2)) - 1) / 3; break;
        default: k = (base + (1LL << ((c - 3) / 2)) + 1) / 3; break;
        }
        EXPECT_EQ(static_cast<long long>(reps), k) << c;
        EXPECT_EQ(singles, bg::enumerate_Tp(c).size()) << c;
    }
}

TEST(Enumeration, CapIsEnforced) {
    bg::EnumerationCap cap;
    EXPECT_EQ(cap.max_crossings(), 28);
    cap.max_candidates = 1 << 10;
    EXPECT_NO_THROW(bg::enumerate_T(12, cap));
    try {
        bg::enumerate_T(13, cap);
        FAIL();
    } catch (const bg::Error& e) {
        EXPECT_EQ(e.code(), bg::ErrorCode::Unsupported);
    }
    EXPECT_THROW(bg::enumerate_T(70), bg::Error);
}
