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

// Exact integer and rational arithmetic shared by every module.
//
// Counts grow like 2^c, so all counting is done with arbitrary precision
// integers; nothing in the counting layer ever touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bridge_genus {

/// Exact nonnegative count (arbitrary precision, never wraps).
using Count = boost::multiprecision::cpp_int;
/// Exact signed accumulator for alternating sums.
using SignedAccumulator = boost::multiprecision::cpp_int;
/// Exact rational number, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// (-1)^k for any integer k.
constexpr int sign_pow(long long k) noexcept { return (k % 2 == 0) ? 1 : -1; }

/// Floor division for possibly negative numerators.
constexpr long long floor_div(long long a, long long b) noexcept {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Count pow2(unsigned e) { return Count(1) << e; }

/// C(n, k) via the multiplicative formula; zero outside 0 <= k <= n.
inline Count binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

inline std::string to_string(const Count& v) { return v.str(); }

/// "p/q" serialization; integers are written as "p/1".
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace bridge_genus
