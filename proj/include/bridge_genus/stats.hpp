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

// Genus distributions at fixed crossing number and their statistics.
//
// Everything that decides a median, a mode or a quasi-symmetry class is done
// in exact integer/rational arithmetic. Floating point only appears in the
// convergence diagnostics at the bottom of this file.

#include "bridge_genus/counts.hpp"
#include "bridge_genus/error.hpp"
#include "bridge_genus/exact.hpp"
#include "bridge_genus/word.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

namespace bridge_genus {

/// Counts per genus g = 1 .. max_genus(c) for one ensemble.
struct GenusDistribution {
    int c = 0;
    WordEnsemble ensemble = WordEnsemble::KnotClasses;
    std::vector<Count> counts; // counts[g - 1]

    int genus_range() const noexcept { return static_cast<int>(counts.size()); }

    Count count(int g) const {
        if (g < 1 || g > genus_range()) return 0;
        return counts[static_cast<std::size_t>(g - 1)];
    }

    Count total() const {
        Count s = 0;
        for (const auto& a : counts) s += a;
        return s;
    }

    friend bool operator==(const GenusDistribution&, const GenusDistribution&) = default;
};

inline GenusDistribution make_distribution(int c, WordEnsemble ensemble, std::vector<Count> counts) {
    if (c < 3) throw Error(ErrorCode::InvalidArgument, "crossing number must be at least 3");
    counts.resize(static_cast<std::size_t>(max_genus(c)), 0);
    return {c, ensemble, std::move(counts)};
}

/// Distribution filled from the closed-form counts.
inline GenusDistribution formula_distribution(int c, WordEnsemble ensemble) {
    if (c < 3) throw Error(ErrorCode::InvalidArgument, "crossing number must be at least 3");
    std::vector<Count> counts;
    for (int g = 1; g <= max_genus(c); ++g) {
        switch (ensemble) {
        case WordEnsemble::AllWords: counts.push_back(t_of(c, g)); break;
        case WordEnsemble::PalindromicWords: counts.push_back(tp_of(c, g)); break;
        case WordEnsemble::KnotClasses: counts.push_back(tbar_of(c, g)); break;
        }
    }
    return make_distribution(c, ensemble, std::move(counts));
}

// ---------------------------------------------------------------------------
// Moments, median, mode

namespace detail {
inline void require_nonempty(const GenusDistribution& d) {
    if (d.total() == 0) throw Error(ErrorCode::InvalidArgument, "empty distribution");
}
} // namespace detail

inline Rational mean(const GenusDistribution& d) {
    detail::require_nonempty(d);
    Count s = 0;
    for (int g = 1; g <= d.genus_range(); ++g) s += g * d.count(g);
    return Rational(s, d.total());
}

inline Rational variance(const GenusDistribution& d) {
    detail::require_nonempty(d);
    Count s2 = 0;
    for (int g = 1; g <= d.genus_range(); ++g) s2 += g * g * d.count(g);
    const Rational m = mean(d);
    return Rational(s2, d.total()) - m * m;
}

/// Every m with P(X <= m) >= 1/2 and P(X >= m) >= 1/2.
inline std::vector<int> median_set(const GenusDistribution& d) {
    detail::require_nonempty(d);
    const Count total = d.total();
    std::vector<int> out;
    Count below = 0; // P(X < m) * total
    for (int m = 1; m <= d.genus_range(); ++m) {
        const Count at_most = below + d.count(m);
        const Count at_least = total - below;
        if (2 * at_most >= total && 2 * at_least >= total) out.push_back(m);
        below = at_most;
    }
    return out;
}

inline std::vector<int> mode_set(const GenusDistribution& d) {
    detail::require_nonempty(d);
    const Count best = *std::max_element(d.counts.begin(), d.counts.end());
    std::vector<int> out;
    for (int g = 1; g <= d.genus_range(); ++g)
        if (d.count(g) == best) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-symmetry

enum class QsClass { LeftDominated, RightDominated, Both, Neither };

constexpr std::string_view to_string(QsClass q) noexcept {
    switch (q) {
    case QsClass::LeftDominated: return "LeftDominated";
    case QsClass::RightDominated: return "RightDominated";
    case QsClass::Both: return "Both";
    case QsClass::Neither: return "Neither";
    }
    return "?";
}

/// Left-dominated: a[n-j+1] <= a[j] <= a[n-j]; right-dominated:
/// a[j] <= a[n-j+1] <= a[j+1]; both for 1 <= j <= floor(n/2), 1-based.
inline QsClass qs_classify(const std::vector<Count>& a) {
    const std::size_t n = a.size();
    auto at = [&](std::size_t one_based) -> const Count& { return a[one_based - 1]; };
    bool left = true;
    bool right = true;
    for (std::size_t j = 1; j <= n / 2; ++j) {
        left = left && at(n - j + 1) <= at(j) && at(j) <= at(n - j);
        right = right && at(j) <= at(n - j + 1) && at(n - j + 1) <= at(j + 1);
    }
    if (left && right) return QsClass::Both;
    if (left) return QsClass::LeftDominated;
    if (right) return QsClass::RightDominated;
    return QsClass::Neither;
}

/// The distribution's counts are already padded to the full genus range.
inline QsClass qs_classify(const GenusDistribution& d) { return qs_classify(d.counts); }

struct SummaryStats {
    Rational mean;
    Rational variance;
    std::vector<int> median_set;
    std::vector<int> mode_set;
    QsClass qs_class = QsClass::Neither;
};

inline SummaryStats summarize(const GenusDistribution& d) {
    return {mean(d), variance(d), median_set(d), mode_set(d), qs_classify(d)};
}

// ---------------------------------------------------------------------------
// Total genus and total square genus

struct TotalsBundle {
    Count g_total;   // sum of genera over T(c)
    Count gp_total;  // over T_p(c)
    Count g2_total;  // sum of squared genera over T(c)
    Count gp2_total; // over T_p(c)

    friend bool operator==(const TotalsBundle&, const TotalsBundle&) = default;
};

namespace detail {

inline Count exact_quotient(const Rational& r, const char* what, int c) {
    if (denominator(r) != 1)
        throw Error(ErrorCode::InexactDivision,
                    std::string(what) + " closed form is not an integer at c=" + std::to_string(c));
    return numerator(r);
}

/// 2^e for a possibly negative exponent.
inline Rational pow2_rational(int e) {
    return e >= 0 ? Rational(pow2(static_cast<unsigned>(e))) : Rational(Count(1), pow2(static_cast<unsigned>(-e)));
}

} // namespace detail

/// Closed forms for the four totals. The odd-c palindromic total uses the
/// sign (-1)^((c+1)/2), the one that satisfies its recurrence; the total
/// square genus at c = 3 is the single trefoil value 1.
inline TotalsBundle totals_closed(int c) {
    if (c < 3) throw Error(ErrorCode::InvalidArgument, "crossing number must be at least 3");
    const Count cc = c;
    TotalsBundle t;
    t.g_total = detail::exact_quotient(
        Rational((9 * cc + 3) * pow2(static_cast<unsigned>(c - 3)) - 24 * sign_pow(c), 54), "g(c)", c);

    if (c % 2 == 0) {
        t.gp_total = detail::exact_quotient(
            Rational((3 * cc + 2) * pow2(static_cast<unsigned>((c - 4) / 2)) + 4 * sign_pow(c / 2), 18), "g_p(c)", c);
        t.gp2_total = detail::exact_quotient(
            Rational((9 * cc * cc + 30 * cc - 64) * pow2(static_cast<unsigned>((c - 4) / 2)) - 16 * sign_pow((c - 2) / 2),
                     216),
            "g_p^2(c)", c);
    } else {
        t.gp_total = detail::exact_quotient(
            Rational((3 * cc + 5) * pow2(static_cast<unsigned>((c - 3) / 2)) + 4 * sign_pow((c + 1) / 2), 18), "g_p(c)",
            c);
        t.gp2_total = detail::exact_quotient(
            Rational((9 * cc * cc + 48 * cc - 25) * pow2(static_cast<unsigned>((c - 3) / 2)) - 16 * sign_pow((c - 1) / 2),
                     216),
            "g_p^2(c)", c);
    }

    if (c == 3) {
        t.g2_total = 1;
    } else {
        const Rational g2 = (Rational(9 * cc * cc + 15 * cc - 16) * detail::pow2_rational(c - 6) - 20 * sign_pow(c)) / 27;
        t.g2_total = detail::exact_quotient(g2, "g^2(c)", c);
    }
    return t;
}

/// Totals for every c in [3, c_max] from the recurrences, seeded with the
/// enumerated values at c = 3..6. Index by c.
inline std::vector<TotalsBundle> totals_recursive_table(int c_max) {
    std::vector<TotalsBundle> t(static_cast<std::size_t>(std::max(c_max, 6) + 1));
    auto at = [&](int c) -> TotalsBundle& { return t[static_cast<std::size_t>(c)]; };
    at(3) = {1, 1, 1, 1};
    at(4) = {1, 1, 1, 1};
    at(5) = {4, 2, 6, 4};
    at(6) = {8, 2, 14, 4};
    for (int c = 7; c <= c_max; ++c) {
        const int s = sign_pow((c + 1) / 2);
        TotalsBundle& b = at(c);
        b.g_total = at(c - 1).g_total + 2 * at(c - 2).g_total + t_total(c - 2) + t_total(c - 3);
        b.gp_total = 2 * at(c - 2).gp_total + tp_total(c - 2) + s;
        b.g2_total = at(c - 1).g2_total + 2 * at(c - 2).g2_total + b.g_total + 2 * at(c - 3).g_total - at(c - 1).g_total;
        b.gp2_total = 2 * at(c - 2).gp2_total + 2 * at(c - 2).gp_total + tp_total(c - 2) + s;
    }
    t.resize(static_cast<std::size_t>(std::max(c_max, 2) + 1));
    return t;
}

inline TotalsBundle totals_recursive(int c) {
    if (c < 3) throw Error(ErrorCode::InvalidArgument, "crossing number must be at least 3");
    return totals_recursive_table(c)[static_cast<std::size_t>(c)];
}

// ---------------------------------------------------------------------------
// Knot-ensemble moments from the totals (valid far beyond enumeration range)

inline Rational knot_mean(int c) {
    const TotalsBundle t = totals_closed(c);
    return Rational(t.g_total + t.gp_total, 2 * knots_total(c));
}

inline Rational knot_variance(int c) {
    const TotalsBundle t = totals_closed(c);
    const Count twice_k = 2 * knots_total(c);
    const Rational m(t.g_total + t.gp_total, twice_k);
    return Rational(t.g2_total + t.gp2_total, twice_k) - m * m;
}

/// knot_mean(c) - (c/4 + 1/12).
inline double mean_gap(int c) { return to_double(knot_mean(c) - (Rational(c, 4) + Rational(1, 12))); }

/// knot_variance(c) - (c/16 - 17/144).
inline double var_gap(int c) { return to_double(knot_variance(c) - (Rational(c, 16) - Rational(17, 144))); }

// ---------------------------------------------------------------------------
// Convergence diagnostics

/// sum_k |C(n,k)/2^n - t_p(2n+3, k+1)/t_p(2n+3)|, summed exactly.
inline double binom_tv_distance(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const int c = 2 * n + 3;
    const Count tp = tp_total(c);
    const Count two_n = pow2(static_cast<unsigned>(n));
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += abs(Rational(binomial(n, k), two_n) - Rational(tp_of(c, k + 1), tp));
    return to_double(sum);
}

/// First k in [2, n] where t_p(c,k)/C(n,k-1) <= t_p(c,k+1)/C(n,k) fails,
/// with c = 2n+3; 0 when the ratios are monotone.
inline int binomial_ratio_violation(int n) {
    const int c = 2 * n + 3;
    for (int k = 2; k <= n; ++k)
        if (tp_of(c, k) * binomial(n, k) > tp_of(c, k + 1) * binomial(n, k - 1)) return k;
    return 0;
}

/// P(G_T(c) <= l/2) - P(G_Tp(2c) <= l).
inline double half_scale_gap(int c, int l) {
    if (c < 3 || l < 1) throw Error(ErrorCode::InvalidArgument, "need c >= 3 and l >= 1");
    Count words = 0;
    for (int g = 1; g <= l / 2; ++g) words += t_of(c, g);
    Count pal = 0;
    for (int g = 1; g <= l; ++g) pal += tp_of(2 * c, g);
    return to_double(Rational(words, t_total(c)) - Rational(pal, tp_total(2 * c)));
}

/// Normal CDF through erfc, which keeps full relative accuracy in the lower
/// tail.
inline double normal_cdf(double x, double mu, double sigma) {
    if (!(sigma > 0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

/// Exact P(G_c <= g) for g = 0 .. max_genus(c).
inline std::vector<Rational> knot_genus_cdf(int c) {
    const Count k = knots_total(c);
    std::vector<Rational> cdf;
    Count cum = 0;
    for (int g = 0; g <= max_genus(c); ++g) {
        cum += tbar_of(c, g);
        cdf.emplace_back(cum, k);
    }
    return cdf;
}

/// max_g |P(G_c <= g) - Phi(g)| with mean n/2 and deviation sqrt(n)/2,
/// n = floor((c-3)/2).
inline double ks_to_normal(int c) {
    if (c < 5) throw Error(ErrorCode::InvalidArgument, "ks_to_normal needs c >= 5");
    const int n = (c - 3) / 2;
    const double mu = n / 2.0;
    const double sigma = std::sqrt(static_cast<double>(n)) / 2.0;
    const auto cdf = knot_genus_cdf(c);
    double worst = 0;
    for (int g = 0; g <= max_genus(c); ++g)
        worst = std::max(worst, std::abs(to_double(cdf[static_cast<std::size_t>(g)]) - normal_cdf(g, mu, sigma)));
    return worst;
}

} // namespace bridge_genus
