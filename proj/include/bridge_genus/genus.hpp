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

// Genus of the 2-bridge knot of a word, computed two independent ways:
//
//  * genus_by_reduction: repeatedly rewrites the last runs of the word into a
//    shorter word, tracking whether the genus drops, down to the trefoil
//    (1,2,1) or the figure-eight (1,1,1,1).
//  * the two-row alternating diagram: lay the crossings out on three
//    horizontal channels, orient the curve, smooth every crossing and count
//    Seifert circles s; then g = (1 + c - s) / 2.

#include "bridge_genus/error.hpp"
#include "bridge_genus/union_find.hpp"
#include "bridge_genus/word.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace bridge_genus {

// ---------------------------------------------------------------------------
// Tail reduction

enum class ReductionCase { Case1, Case2A, Case2B, Case3, Case4 };

constexpr std::string_view to_string(ReductionCase rc) noexcept {
    switch (rc) {
    case ReductionCase::Case1: return "Case1";
    case ReductionCase::Case2A: return "Case2A";
    case ReductionCase::Case2B: return "Case2B";
    case ReductionCase::Case3: return "Case3";
    case ReductionCase::Case4: return "Case4";
    }
    return "?";
}

/// Determined by the two runs before the final single run, and for the
/// (2,2) tail by the run before those.
inline ReductionCase classify_tail(const Word& w) {
    const int c = w.crossings();
    if (c < 5) throw Error(ErrorCode::TooShort, "tail reduction needs at least 5 runs");
    const int a = w[static_cast<std::size_t>(c - 3)];
    const int b = w[static_cast<std::size_t>(c - 2)];
    if (a == 1 && b == 1) return ReductionCase::Case1;
    if (a == 2 && b == 2) return w[static_cast<std::size_t>(c - 4)] == 1 ? ReductionCase::Case2A : ReductionCase::Case2B;
    if (a == 1) return ReductionCase::Case3;
    return ReductionCase::Case4;
}

struct Reduction {
    Word word;
    int genus_delta; // genus(original) - genus(word), 0 or 1
};

/// One rewrite of the tail. Every rule removes a multiple of three symbols,
/// so the result is again a valid word with one or two fewer runs.
inline Reduction reduce_once(const Word& w) {
    const ReductionCase rc = classify_tail(w);
    const int c = w.crossings();
    std::vector<Word::RunLength> runs(w.eps().begin(), w.eps().begin() + (c - 3));
    int delta = 0;
    switch (rc) {
    case ReductionCase::Case1: // +-+  ->  ++-
        runs.push_back(2);
        runs.push_back(1);
        break;
    case ReductionCase::Case2A: // ++--+  ->  +-
    case ReductionCase::Case2B:
        runs.push_back(1);
        runs.push_back(1);
        delta = (rc == ReductionCase::Case2B) ? 1 : 0;
        break;
    case ReductionCase::Case3: // +--+  ->  +
        runs.push_back(1);
        delta = 1;
        break;
    case ReductionCase::Case4: // ++-+  ->  +
        runs.push_back(1);
        break;
    }
    return {WordBuilder::unchecked(std::move(runs)), delta};
}

/// Genus via the tail-reduction machine. The two terminal words (1,2,1) and
/// (1,1,1,1) both have genus 1.
inline int genus_by_reduction(const Word& w) {
    int genus = 1;
    Word cur = w;
    while (cur.crossings() >= 5) {
        Reduction r = reduce_once(cur);
        genus += r.genus_delta;
        cur = std::move(r.word);
    }
    return genus;
}

// ---------------------------------------------------------------------------
// Two-row alternating diagram

enum class Row : std::uint8_t { Row1, Row2 };

using RowSequence = std::vector<Row>;

/// A run sits in the first row when it is a single '+' or a double '-'.
inline RowSequence row_sequence(const Word& w) {
    RowSequence rows;
    rows.reserve(static_cast<std::size_t>(w.crossings()));
    for (int i = 0; i < w.crossings(); ++i) {
        const bool plus_run = (i % 2 == 0);
        const bool single = (w[static_cast<std::size_t>(i)] == 1);
        rows.push_back(plus_run == single ? Row::Row1 : Row::Row2);
    }
    return rows;
}

enum class Channel : std::uint8_t { Top = 0, Middle = 1, Bottom = 2 };

/// Channels joined by a crossing in the given row: Row1 = top/middle,
/// Row2 = middle/bottom.
constexpr std::pair<Channel, Channel> row_channels(Row r) noexcept {
    return r == Row::Row1 ? std::pair{Channel::Top, Channel::Middle} : std::pair{Channel::Middle, Channel::Bottom};
}

/// How the six loose channel ends are closed up: one cap on each side, plus a
/// long arc joining the two remaining ends.
struct DiagramClosure {
    std::pair<Channel, Channel> left_cap;
    std::pair<Channel, Channel> right_cap;
};

/// The closure that realizes the word's knot. Each cap joins the channel
/// pair of the row opposite to the crossing next to it. The first crossing is
/// always in Row1, so the left cap is always middle/bottom; the right cap
/// depends on the row of the last crossing (Row1 for odd c, Row2 for even c).
inline DiagramClosure standard_closure(const RowSequence& rows) {
    const Row last = rows.back();
    return {row_channels(Row::Row2), row_channels(last == Row::Row1 ? Row::Row2 : Row::Row1)};
}

/// Crossing ends in cyclic order around the crossing.
enum class CrossingEnd : std::uint8_t { UpperLeft = 0, UpperRight = 1, LowerRight = 2, LowerLeft = 3 };

class PlanarDiagram {
public:
    using Node = std::size_t;

    int crossing_count() const noexcept { return static_cast<int>(rows_.size()); }
    const RowSequence& rows() const noexcept { return rows_; }
    std::size_t node_count() const noexcept { return arc_.size(); }

    Node crossing_node(int i, CrossingEnd e) const noexcept {
        return 4 * static_cast<std::size_t>(i) + static_cast<std::size_t>(e);
    }
    Node left_node(Channel k) const noexcept { return 4 * rows_.size() + static_cast<std::size_t>(k); }
    Node right_node(Channel k) const noexcept { return 4 * rows_.size() + 3 + static_cast<std::size_t>(k); }
    bool is_crossing_node(Node n) const noexcept { return n < 4 * rows_.size(); }

    /// Partner along a channel segment.
    Node arc(Node n) const noexcept { return arc_[n]; }
    /// Partner through the element owning n: the straight-through end of a
    /// crossing, or the other end of a closure arc.
    Node through(Node n) const noexcept { return through_[n]; }

    /// Number of closed curves traced by following arcs and pass-throughs.
    int component_count() const {
        std::vector<bool> seen(node_count(), false);
        int components = 0;
        for (Node s = 0; s < node_count(); ++s) {
            if (seen[s]) continue;
            ++components;
            Node x = s;
            while (!seen[x]) {
                seen[x] = true;
                const Node y = through_[x];
                seen[y] = true;
                x = arc_[y];
            }
        }
        return components;
    }

private:
    friend PlanarDiagram build_diagram(const RowSequence&, const DiagramClosure&);

    RowSequence rows_;
    std::vector<Node> arc_;
    std::vector<Node> through_;
};

inline PlanarDiagram build_diagram(const RowSequence& rows, const DiagramClosure& closure) {
    if (rows.empty() || rows.front() != Row::Row1)
        throw Error(ErrorCode::InvalidArgument, "row sequence must be nonempty and start in Row1");
    PlanarDiagram d;
    d.rows_ = rows;
    const std::size_t n = 4 * rows.size() + 6;
    d.arc_.assign(n, n);
    d.through_.assign(n, n);

    auto link_arc = [&](std::size_t a, std::size_t b) {
        d.arc_[a] = b;
        d.arc_[b] = a;
    };
    auto link_through = [&](std::size_t a, std::size_t b) {
        d.through_[a] = b;
        d.through_[b] = a;
    };

    // Loose end of each channel, walking left to right.
    std::array<std::size_t, 3> open{d.left_node(Channel::Top), d.left_node(Channel::Middle),
                                    d.left_node(Channel::Bottom)};
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const auto [upper, lower] = row_channels(rows[static_cast<std::size_t>(i)]);
        const auto u = static_cast<std::size_t>(upper);
        const auto l = static_cast<std::size_t>(lower);
        link_arc(open[u], d.crossing_node(i, CrossingEnd::UpperLeft));
        link_arc(open[l], d.crossing_node(i, CrossingEnd::LowerLeft));
        open[u] = d.crossing_node(i, CrossingEnd::UpperRight);
        open[l] = d.crossing_node(i, CrossingEnd::LowerRight);
        link_through(d.crossing_node(i, CrossingEnd::UpperLeft), d.crossing_node(i, CrossingEnd::LowerRight));
        link_through(d.crossing_node(i, CrossingEnd::LowerLeft), d.crossing_node(i, CrossingEnd::UpperRight));
    }
    for (Channel k : {Channel::Top, Channel::Middle, Channel::Bottom})
        link_arc(open[static_cast<std::size_t>(k)], d.right_node(k));

    auto remaining = [](std::pair<Channel, Channel> cap) {
        return static_cast<Channel>(3 - static_cast<int>(cap.first) - static_cast<int>(cap.second));
    };
    link_through(d.left_node(closure.left_cap.first), d.left_node(closure.left_cap.second));
    link_through(d.right_node(closure.right_cap.first), d.right_node(closure.right_cap.second));
    link_through(d.left_node(remaining(closure.left_cap)), d.right_node(remaining(closure.right_cap)));

    if (d.component_count() != 1)
        throw Error(ErrorCode::NotAKnot, "diagram closes up into " + std::to_string(d.component_count()) +
                                             " components");
    return d;
}

inline PlanarDiagram build_diagram(const RowSequence& rows) {
    if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "empty row sequence");
    return build_diagram(rows, standard_closure(rows));
}

/// Orients the curve by tracing it from the bottom-left loose end, smooths
/// every crossing the oriented way, and counts the resulting circles.
inline int count_seifert_circles(const PlanarDiagram& d) {
    using Node = PlanarDiagram::Node;
    const std::size_t n = d.node_count();
    std::vector<bool> incoming(n, false);
    {
        const Node start = d.left_node(Channel::Bottom);
        Node x = start;
        std::size_t visited = 0;
        do {
            incoming[x] = true; // the curve enters the element at x ...
            x = d.arc(d.through(x)); // ... and leaves at through(x)
            visited += 2;
        } while (x != start);
        if (visited != n) throw Error(ErrorCode::NotAKnot, "diagram has more than one component");
    }

    UnionFind circles(n);
    for (Node x = 0; x < n; ++x) {
        circles.unite(x, d.arc(x));
        if (!d.is_crossing_node(x)) {
            circles.unite(x, d.through(x));
            continue;
        }
        if (!incoming[x]) continue;
        // An incoming end is adjacent to exactly one outgoing end: the one
        // belonging to the other strand. Oriented smoothing joins those two.
        const Node base = x - x % 4;
        const Node next = base + (x % 4 + 1) % 4;
        const Node prev = base + (x % 4 + 3) % 4;
        circles.unite(x, incoming[next] ? prev : next);
    }
    return static_cast<int>(circles.group_count());
}

inline int genus_from_seifert(int crossings, int circles) {
    const int twice = 1 + crossings - circles;
    if (twice % 2 != 0)
        throw Error(ErrorCode::ParityViolation, "1 + c - s = " + std::to_string(twice) + " is odd");
    if (twice < 2) throw Error(ErrorCode::NonPositiveGenus, "1 + c - s = " + std::to_string(twice));
    return twice / 2;
}

/// Genus via Seifert circles on the alternating diagram.
inline int genus_by_seifert(const Word& w) {
    return genus_from_seifert(w.crossings(), count_seifert_circles(build_diagram(row_sequence(w))));
}

} // namespace bridge_genus
