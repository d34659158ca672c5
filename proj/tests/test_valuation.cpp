#include <catch2/catch_amalgamated.hpp>

#include "charcensus/valuation.hpp"
#include "oracles.hpp"

using namespace charcensus;

TEST_CASE("q-ary expansion") {
    const auto e0 = q_expand(0, 2);
    CHECK(e0.digits.empty());
    CHECK(e0.digit_sum() == 0);

    const auto e4 = q_expand(4, 2);
    CHECK(e4.digits == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(e4.digit_sum() == 1);

    CHECK(q_expand(50, 2).digit_sum() == 3);  // 110010
    CHECK(digit_sum(50, 2) == 3);

    SECTION("reconstruction and digit range") {
        for (std::uint64_t n = 0; n <= 2000; ++n)
            for (std::uint32_t q : {2u, 3u, 7u, 10u}) {
                const auto e = q_expand(n, q);
                CHECK(e.value() == n);
                for (auto d : e.digits) CHECK(d < q);
                if (!e.digits.empty()) CHECK(e.digits.back() > 0);
                CHECK(e.digit_sum() == digit_sum(n, q));
            }
    }
}

TEST_CASE("digit sum bound a(n) <= (q-1)(r+1)") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u})
        for (std::uint64_t n = 1; n <= 100000; ++n)
            CHECK(digit_sum(n, q) <= (q - 1) * (floor_log(n, q) + 1));
}

TEST_CASE("primality gate") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_WITH(legendre_valuation_factorial(10, 4), "prime required");
    CHECK_THROWS_WITH(degree_valuation_macdonald(Partition({2, 1}), 6), "prime required");
    CHECK_THROWS_WITH(degree_valuation_hooks(Partition({2, 1}), 9), "prime required");
    CHECK_THROWS_WITH(falling_factorial_valuation(6, 2, 8), "prime required");
}

TEST_CASE("Legendre closed form") {
    CHECK(legendre_valuation_factorial(0, 3) == 0);
    CHECK(legendre_valuation_factorial(4, 2) == 3);
    CHECK(legendre_valuation_factorial(10, 3) == 4);

    SECTION("equals the floor-sum route up to 1e5") {
        for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u})
            for (std::uint64_t n = 0; n <= 100000; ++n)
                CHECK(legendre_valuation_factorial(n, q) == testoracle::legendre_floor_sum(n, q));
    }
}

TEST_CASE("falling factorial valuation") {
    CHECK(falling_factorial_valuation(9, 0, 3) == 0);
    CHECK(falling_factorial_valuation(4, 2, 2) == 2);    // (4)_2 = 12
    CHECK(falling_factorial_valuation(10, 3, 3) == 2);   // (10)_3 = 720
    CHECK_THROWS_WITH(falling_factorial_valuation(3, 4, 2), "empty falling factorial domain");

    SECTION("difference identity and the log bound") {
        for (std::uint32_t q : {2u, 3u, 5u})
            for (std::uint64_t n = 1; n <= 2000; ++n)
                for (std::uint64_t k = 0; k <= n; ++k) {
                    const auto v = falling_factorial_valuation(n, k, q);
                    CHECK(v == legendre_valuation_factorial(n, q) -
                                   legendre_valuation_factorial(n - k, q));
                    CHECK(static_cast<std::int64_t>(v) <=
                          small_valuation_threshold(n, q, static_cast<std::uint32_t>(k)));
                }
    }
}

TEST_CASE("Macdonald degree valuation examples") {
    CHECK(degree_valuation_macdonald(Partition({7}), 3) == 0);
    CHECK(degree_valuation_macdonald(Partition({2, 1}), 2) == 1);
    CHECK(degree_valuation_macdonald(Partition({2, 2}), 2) == 1);
}

TEST_CASE("hook-route degree valuation examples") {
    CHECK(degree_valuation_hooks(Partition({1, 1, 1}), 5) == 0);
    CHECK(degree_valuation_hooks(Partition({2, 1}), 2) == 1);
    CHECK(degree_valuation_hooks(Partition({3, 1}), 2) == 0);
}

TEST_CASE("tower route equals hook route") {
    for (std::uint32_t n = 0; n <= 22; ++n)
        for_each_partition(n, [&](const Partition& p) {
            for (std::uint32_t q : {2u, 3u, 5u, 7u})
                CHECK(degree_valuation_macdonald(p, q) == degree_valuation_hooks(p, q));
        });
}

TEST_CASE("small valuation bound is equivalent to the weight bound") {
    // v_q(f) <= b iff w(lambda) <= a(n) + b(q-1)
    for (std::uint32_t n = 0; n <= 25; ++n)
        for_each_partition(n, [&](const Partition& p) {
            for (std::uint32_t q : {2u, 3u}) {
                const std::uint64_t w = tower_weight(core_tower(p, q));
                const std::uint64_t a = digit_sum(n, q);
                const std::uint32_t v = degree_valuation_macdonald(p, q);
                for (std::uint32_t bb = 0; bb <= 3; ++bb)
                    CHECK((v <= bb) == (w <= a + std::uint64_t(bb) * (q - 1)));
            }
        });
}

TEST_CASE("exact threshold comparison") {
    CHECK(small_valuation_threshold(8, 2, 0) == 3);   // log_2 8 exactly
    CHECK(small_valuation_threshold(10, 2, 0) == 3);  // 2^3 <= 10 < 2^4
    CHECK(small_valuation_threshold(9, 3, 1) == 5);   // 3^(5-1) = 81 = 9^2
    CHECK(small_valuation_threshold(1, 2, 4) == 4);
    CHECK_THROWS_AS(small_valuation_threshold(0, 2, 0), std::invalid_argument);
    CHECK_THROWS_WITH(small_valuation_threshold(9, 4, 0), "prime required");

    SECTION("ties at powers of q are included") {
        for (std::uint32_t j = 1; j <= 20; ++j) {
            const std::uint64_t n = std::uint64_t(1) << j;
            CHECK(small_valuation_threshold(n, 2, 0) == j);
        }
        for (std::uint32_t j = 1; j <= 12; ++j) {
            std::uint64_t n = 1;
            for (std::uint32_t i = 0; i < j; ++i) n *= 3;
            CHECK(small_valuation_threshold(n, 3, 0) == 2 * static_cast<std::int64_t>(j));
        }
    }
}
