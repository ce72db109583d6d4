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

// Billiard words in run-length form.
//
// A word of crossing number c is the sequence of run lengths eps[0..c-1],
// each 1 or 2. Run i (0-based) is a block of '+' when i is even and '-' when
// i is odd, so the signs never need to be stored. A valid word has
// eps[0] = eps[c-1] = 1, c >= 3, and total symbol length = 1 (mod 3).
//
// Because signs are positional, both the reverse (odd c) and the reverse
// mirror (even c) act on eps as plain reversal.

#include "bridge_genus/error.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bridge_genus {

enum class WordEnsemble { AllWords, PalindromicWords, KnotClasses };

constexpr std::string_view to_string(WordEnsemble e) noexcept {
    switch (e) {
    case WordEnsemble::AllWords: return "words";
    case WordEnsemble::PalindromicWords: return "palindromic";
    case WordEnsemble::KnotClasses: return "knots";
    }
    return "?";
}

class Word {
public:
    using RunLength = std::uint8_t;

    /// Validating constructor; throws Error and never normalizes.
    template <typename Int>
    static Word make(std::span<const Int> eps) {
        if (eps.size() < 3)
            throw Error(ErrorCode::TooFewRuns, "a word needs at least 3 runs, got " + std::to_string(eps.size()));
        std::vector<RunLength> runs;
        runs.reserve(eps.size());
        long long length = 0;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const auto v = static_cast<long long>(eps[i]);
            if (v != 1 && v != 2)
                throw Error(ErrorCode::RunOutOfRange,
                            "run " + std::to_string(i + 1) + " has length " + std::to_string(v));
            runs.push_back(static_cast<RunLength>(v));
            length += v;
        }
        if (runs.front() != 1 || runs.back() != 1)
            throw Error(ErrorCode::EndRunNotSingle, "first and last runs must have length 1");
        if (length % 3 != 1)
            throw Error(ErrorCode::LengthModViolation,
                        "symbol length " + std::to_string(length) + " is not 1 mod 3");
        return Word(std::move(runs));
    }

    static Word make(std::initializer_list<int> eps) {
        return make(std::span<const int>(eps.begin(), eps.size()));
    }

    int crossings() const noexcept { return static_cast<int>(eps_.size()); }

    /// Number of +/- symbols.
    int length() const noexcept { return std::accumulate(eps_.begin(), eps_.end(), 0); }

    std::span<const RunLength> eps() const noexcept { return eps_; }

    /// 0-based run access.
    int operator[](std::size_t i) const noexcept { return eps_[i]; }

    std::vector<int> eps_vector() const { return {eps_.begin(), eps_.end()}; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        return std::lexicographical_compare_three_way(a.eps_.begin(), a.eps_.end(), b.eps_.begin(),
                                                      b.eps_.end());
    }

private:
    explicit Word(std::vector<RunLength> runs) : eps_(std::move(runs)) {}

    friend class WordBuilder;

    std::vector<RunLength> eps_;
};

/// Internal fast path for code that constructs words known to be valid
/// (enumeration and reduction). Debug builds still check the invariants.
class WordBuilder {
public:
    static Word unchecked(std::vector<Word::RunLength> runs) {
#ifndef NDEBUG
        (void)Word::make(std::span<const Word::RunLength>(runs));
#endif
        return Word(std::move(runs));
    }
};

template <typename Int>
Word make_word(std::span<const Int> eps) {
    return Word::make(eps);
}

inline Word make_word(std::initializer_list<int> eps) { return Word::make(eps); }

inline Word make_word(const std::vector<int>& eps) { return Word::make(std::span<const int>(eps)); }

/// r(w) for odd c, reverse-mirror for even c; both are eps reversal.
inline Word reversal_partner(const Word& w) {
    std::vector<Word::RunLength> runs(w.eps().rbegin(), w.eps().rend());
    return WordBuilder::unchecked(std::move(runs));
}

inline bool is_palindromic_type(const Word& w) {
    const auto e = w.eps();
    return std::equal(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(e.size() / 2), e.rbegin());
}

/// ASCII '+'/'-' expansion of the runs.
inline std::string to_symbols(const Word& w) {
    std::string out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.crossings(); ++i) out.append(static_cast<std::size_t>(w[i]), (i % 2 == 0) ? '+' : '-');
    return out;
}

/// Parses a '+'/'-' string (the Unicode minus U+2212 is also accepted) back
/// into a validated word. Runs must alternate starting with '+'.
inline Word parse_symbols(std::string_view text) {
    std::vector<int> runs;
    char prev = 0;
    for (std::size_t i = 0; i < text.size();) {
        char sym = 0;
        if (text[i] == '+' || text[i] == '-') {
            sym = text[i];
            i += 1;
        } else if (text.substr(i, 3) == "\xE2\x88\x92") {
            sym = '-';
            i += 3;
        } else {
            throw Error(ErrorCode::InvalidArgument, "unexpected character in word '" + std::string(text) + "'");
        }
        if (sym == prev) {
            ++runs.back();
        } else {
            if (runs.empty() && sym != '+')
                throw Error(ErrorCode::InvalidArgument, "words start with a '+' run");
            runs.push_back(1);
            prev = sym;
        }
    }
    return make_word(runs);
}

// ---------------------------------------------------------------------------
// Enumeration

/// Upper bound on the number of interior candidates 2^(c-2) a scan may visit.
struct EnumerationCap {
    std::uint64_t max_candidates = std::uint64_t{1} << 26;

    int max_crossings() const noexcept { return 2 + std::bit_width(max_candidates) - 1; }
};

/// A contiguous slice of the lexicographic scan, selected by a fixed prefix
/// of the interior runs eps[1..prefix_bits].
struct Shard {
    unsigned prefix_bits = 0;
    std::uint64_t index = 0;
};

namespace detail {

inline void check_cap(int c, const EnumerationCap& cap) {
    if (c < 3) throw Error(ErrorCode::TooFewRuns, "crossing number must be at least 3");
    if (c - 2 > 62 || (std::uint64_t{1} << (c - 2)) > cap.max_candidates)
        throw Error(ErrorCode::Unsupported,
                    "enumeration of c=" + std::to_string(c) + " exceeds the configured cap");
}

// Interior bit j (from the most significant end) set means eps[1 + j] = 2,
// so ascending masks give ascending lexicographic eps.
inline void fill_from_mask(std::vector<Word::RunLength>& runs, int c, std::uint64_t mask) {
    const int n = c - 2;
    runs[0] = 1;
    runs[static_cast<std::size_t>(c - 1)] = 1;
    for (int j = 0; j < n; ++j) runs[static_cast<std::size_t>(1 + j)] = ((mask >> (n - 1 - j)) & 1U) ? 2 : 1;
}

} // namespace detail

/// Visits every word of T(c) in the given shard in ascending lexicographic
/// order of eps.
template <typename Fn>
void for_each_T(int c, Fn&& fn, const EnumerationCap& cap = {}, Shard shard = {}) {
    detail::check_cap(c, cap);
    const int n = c - 2;
    const unsigned bits = std::min<unsigned>(shard.prefix_bits, static_cast<unsigned>(n));
    if (bits < 64 && shard.index >= (std::uint64_t{1} << bits)) return;
    const std::uint64_t span = std::uint64_t{1} << (static_cast<unsigned>(n) - bits);
    const std::uint64_t begin = shard.index * span;
    const std::uint64_t end = begin + span;
    std::vector<Word::RunLength> runs(static_cast<std::size_t>(c));
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        if ((c + std::popcount(mask)) % 3 != 1) continue;
        detail::fill_from_mask(runs, c, mask);
        fn(WordBuilder::unchecked(runs));
    }
}

/// Visits T_p(c) in the same order as filtering for_each_T. Palindromes are
/// generated from their first half, whose lexicographic order matches.
template <typename Fn>
void for_each_Tp(int c, Fn&& fn, const EnumerationCap& cap = {}) {
    detail::check_cap(c, cap);
    const int n = c - 2;
    const int free_runs = (n + 1) / 2; // eps[1 .. ceil(n/2)]
    std::vector<Word::RunLength> runs(static_cast<std::size_t>(c));
    for (std::uint64_t half = 0; half < (std::uint64_t{1} << free_runs); ++half) {
        runs[0] = 1;
        runs[static_cast<std::size_t>(c - 1)] = 1;
        for (int j = 0; j < free_runs; ++j) {
            const auto v = static_cast<Word::RunLength>(((half >> (free_runs - 1 - j)) & 1U) ? 2 : 1);
            runs[static_cast<std::size_t>(1 + j)] = v;
            runs[static_cast<std::size_t>(c - 2 - j)] = v;
        }
        const int len = std::accumulate(runs.begin(), runs.end(), 0);
        if (len % 3 != 1) continue;
        fn(WordBuilder::unchecked(runs));
    }
}

/// One representative per knot class with its number of words in T(c).
struct ClassRep {
    Word word;
    int multiplicity; // 1 for palindromic words, 2 otherwise
};

/// Emits the lexicographically smaller word of each {w, reversal_partner(w)}
/// pair, in ascending order.
template <typename Fn>
void for_each_class_rep(int c, Fn&& fn, const EnumerationCap& cap = {}, Shard shard = {}) {
    for_each_T(
        c,
        [&](const Word& w) {
            const auto order = w <=> reversal_partner(w);
            if (order == std::strong_ordering::equal)
                fn(ClassRep{w, 1});
            else if (order == std::strong_ordering::less)
                fn(ClassRep{w, 2});
        },
        cap, shard);
}

inline std::vector<Word> enumerate_T(int c, const EnumerationCap& cap = {}) {
    std::vector<Word> out;
    for_each_T(c, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

inline std::vector<Word> enumerate_Tp(int c, const EnumerationCap& cap = {}) {
    std::vector<Word> out;
    for_each_Tp(c, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

inline std::vector<ClassRep> canonical_class_reps(int c, const EnumerationCap& cap = {}) {
    std::vector<ClassRep> out;
    for_each_class_rep(c, [&](ClassRep r) { out.push_back(std::move(r)); }, cap);
    return out;
}

} // namespace bridge_genus
