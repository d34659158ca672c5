#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace charcensus {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint32_t n) {
    BigInt r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (n)_k = n (n-1) ... (n-k+1); empty product for k = 0.
inline BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("empty falling factorial domain");
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline BigInt int_pow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is binom(n-k+i, i) after each step
    }
    return r;
}

/// Decimal rendering of num/den with `digits` fractional places, round half up.
/// Both arguments must be non-negative with den > 0.
inline std::string ratio_decimal(const BigInt& num, const BigInt& den, unsigned digits = 6) {
    if (den <= 0 || num < 0) throw std::invalid_argument("ratio requires num >= 0 and den > 0");
    const BigInt scale = int_pow(BigInt(10), digits);
    const BigInt scaled = num * scale;
    BigInt t = scaled / den;
    const BigInt rem = scaled % den;
    if (2 * rem >= den) ++t;
    std::string frac = BigInt(t % scale).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return BigInt(t / scale).str() + "." + frac;
}

}  // namespace charcensus
