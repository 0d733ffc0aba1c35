#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace severi {

/// Exact nonnegative curve counts. Values routinely exceed 64 bits as the
/// degree grows, so everything downstream is arbitrary precision.
using Count = boost::multiprecision::cpp_int;

/// Exact rational scratch type for in-flight accumulators (the final counts
/// are always integers; see the engines' integrality checks).
using Rational = boost::multiprecision::cpp_rational;

inline Count factorial(int n) {
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Count binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // divides exactly: r is C(n, i+1) times earlier factors
    }
    return r;
}

/// n! / (parts_1! ... parts_m!) when the parts sum to n, otherwise 0.
/// The zero-on-mismatch contract is load bearing: callers use it to discard
/// distributions that do not exhaust a resource exactly.
inline Count multinomial(int n, std::span<const int> parts) {
    if (n < 0) return 0;
    int total = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    if (total != n) return 0;
    Count r = 1;
    int used = 0;
    for (int p : parts) {
        used += p;
        r *= binomial(used, p);
    }
    return r;
}

inline Count multinomial(int n, const std::vector<int>& parts) {
    return multinomial(n, std::span<const int>(parts));
}

}  // namespace severi
