#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "charcensus/abacus.hpp"
#include "charcensus/bigint.hpp"
#include "charcensus/partition.hpp"

namespace charcensus {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::uint64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("prime required");
}

/// Base-q digits of n, little-endian, no trailing zero digit; empty for n = 0.
struct QaryExpansion {
    std::uint32_t q = 2;
    std::vector<std::uint32_t> digits;

    std::uint32_t digit_sum() const {
        std::uint32_t s = 0;
        for (auto d : digits) s += d;
        return s;
    }
    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) v = v * q + digits[i];
        return v;
    }
};

inline QaryExpansion q_expand(std::uint64_t n, std::uint32_t q) {
    require_q(q);
    QaryExpansion e{q, {}};
    while (n != 0) {
        e.digits.push_back(static_cast<std::uint32_t>(n % q));
        n /= q;
    }
    return e;
}

/// a(n): sum of the base-q digits of n.
inline std::uint32_t digit_sum(std::uint64_t n, std::uint32_t q) {
    require_q(q);
    std::uint32_t s = 0;
    while (n != 0) {
        s += static_cast<std::uint32_t>(n % q);
        n /= q;
    }
    return s;
}

/// Largest e with q^e <= n, for n >= 1.
inline std::uint32_t floor_log(std::uint64_t n, std::uint32_t q) {
    require_q(q);
    if (n == 0) throw std::invalid_argument("floor_log requires n >= 1");
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc <= n / q) {
        acc *= q;
        ++e;
    }
    return e;
}

/// v_q(n!) = (n - a(n)) / (q - 1), Legendre's closed form.
inline std::uint64_t legendre_valuation_factorial(std::uint64_t n, std::uint32_t q) {
    require_prime(q);
    return (n - digit_sum(n, q)) / (q - 1);
}

/// v_q((n)_k) = (k + a(n-k) - a(n)) / (q - 1).
inline std::uint64_t falling_factorial_valuation(std::uint64_t n, std::uint64_t k,
                                                 std::uint32_t q) {
    require_prime(q);
    if (k > n) throw std::invalid_argument("empty falling factorial domain");
    const std::int64_t num = static_cast<std::int64_t>(k) + digit_sum(n - k, q) - digit_sum(n, q);
    if (num < 0 || num % (q - 1) != 0)
        throw std::logic_error("digit sums inconsistent with Legendre's formula");
    return static_cast<std::uint64_t>(num) / (q - 1);
}

/// v_q(f_lambda) from the core tower: (w(lambda) - a(n)) / (q - 1).
inline std::uint32_t degree_valuation_macdonald(const Partition& lam, std::uint32_t q) {
    require_prime(q);
    const std::uint64_t w = tower_weight(core_tower(lam, q));
    const std::uint64_t a = digit_sum(lam.size(), q);
    if (w < a || (w - a) % (q - 1) != 0)
        throw std::logic_error("tower weight inconsistent with digit sum");
    return static_cast<std::uint32_t>((w - a) / (q - 1));
}

/// v_q(f_lambda) the long way round: v_q(n!) minus the hook valuations.
inline std::uint32_t degree_valuation_hooks(const Partition& lam, std::uint32_t q) {
    require_prime(q);
    std::uint64_t v = legendre_valuation_factorial(lam.size(), q);
    std::uint64_t hooks_v = 0;
    for (std::uint64_t h : hook_lengths(lam))
        while (h % q == 0) {
            ++hooks_v;
            h /= q;
        }
    if (hooks_v > v) throw std::logic_error("hook product valuation exceeds v_q(n!)");
    return static_cast<std::uint32_t>(v - hooks_v);
}

/// Largest integer T with T <= m + (q-1) log_q n, evaluated exactly:
/// a valuation v is "small" precisely when v <= T. Integer v satisfies
/// v <= m + (q-1) log_q n iff q^(v-m) <= n^(q-1), so T - m = floor(log_q n^(q-1)).
inline std::int64_t small_valuation_threshold(std::uint64_t n, std::uint32_t q,
                                              std::uint32_t m) {
    require_prime(q);
    if (n == 0) throw std::invalid_argument("threshold requires n >= 1");
    const BigInt target = int_pow(BigInt(n), q - 1);
    std::int64_t e = 0;
    BigInt acc = 1;
    while (acc * q <= target) {
        acc *= q;
        ++e;
    }
    return static_cast<std::int64_t>(m) + e;
}

}  // namespace charcensus
