#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace deckrec {

// Deck multiplicities and moment arithmetic overflow 64 bits quickly
// (counts scale like C(n,k) times embedding factors), so every count in
// this library is an exact arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient. Returns 0 outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r == C(n-k+i, i)
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline constexpr int kStirlingMax = 64;

/// Stirling number of the second kind S2(j, m), exact, for j, m <= 64.
inline const BigInt& stirling2(int j, int m) {
    static const std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> t(
            kStirlingMax + 1, std::vector<BigInt>(kStirlingMax + 1, BigInt(0)));
        t[0][0] = 1;
        for (int n = 1; n <= kStirlingMax; ++n)
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + BigInt(k) * t[n - 1][k];
        return t;
    }();
    if (j < 0 || m < 0 || j > kStirlingMax || m > kStirlingMax)
        throw std::out_of_range("stirling2: index out of range");
    return table[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
}

}  // namespace deckrec
