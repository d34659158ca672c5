#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "charcensus/abacus.hpp"
#include "charcensus/bigint.hpp"
#include "charcensus/character.hpp"
#include "charcensus/partition.hpp"
#include "charcensus/valuation.hpp"

namespace charcensus {

inline unsigned default_worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// One census statistic over the partitions of n. The denominator is always
/// p(n) exactly; ratios are rendered from the two integers at output time and
/// never stored.
struct CensusReport {
    std::uint32_t n = 0;
    std::string kind;
    std::string params;
    BigInt numerator;
    BigInt denominator;
};

/// Upper-bound check for p_b(n), the number of partitions of n whose degree
/// valuation is at most b, against ctilde_q(N_b)^(N_b) * (qn + N_b)^(N_b).
struct BoundReport {
    std::uint32_t n = 0;
    std::uint32_t q = 2;
    std::uint32_t b = 0;
    std::uint32_t n_b = 0;        // N_b = (q-1)(floor(log_q n) + b + 1)
    std::uint64_t p_b = 0;
    BigInt bound;
    bool holds = false;           // p_b <= bound
    bool binomial_step_ok = false;  // binom(qn+N_b, N_b) <= (qn+N_b)^(N_b)
};

namespace detail {

inline void merge_into(std::uint64_t& total, std::uint64_t&& part) { total += part; }

inline void merge_into(std::map<std::uint32_t, std::uint64_t>& total,
                       std::map<std::uint32_t, std::uint64_t>&& part) {
    for (const auto& [key, count] : part) total[key] += count;
}

/// Folds a per-worker accumulator over the partitions of n, sharded into
/// contiguous index ranges. Partial results merge in range order, so the
/// outcome is identical for every worker count.
template <typename Result, typename MakeWorker>
Result sharded_partition_fold(std::uint32_t n, unsigned workers, MakeWorker make_worker) {
    const auto ranges = split_index_range(n, workers);
    std::vector<Result> partial(ranges.size());
    const auto run_range = [](const PartitionIndexRange& range, auto& step, Result& out) {
        PartitionEnumerator en(range.n, range.begin);
        for (std::uint64_t i = range.begin; i < range.end; ++i) {
            auto p = en.next();
            step(out, *p);
        }
    };
    if (ranges.size() == 1) {
        auto step = make_worker();
        run_range(ranges[0], step, partial[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i)
            pool.emplace_back([&, i] {
                auto step = make_worker();
                run_range(ranges[i], step, partial[i]);
            });
        for (auto& t : pool) t.join();
    }
    Result total{};
    for (auto& part : partial) merge_into(total, std::move(part));
    return total;
}

/// Counts partitions of n accepted by a per-worker predicate.
template <typename MakePredicate>
std::uint64_t sharded_partition_count(std::uint32_t n, unsigned workers,
                                      MakePredicate make_predicate) {
    return sharded_partition_fold<std::uint64_t>(n, workers, [&] {
        return [pred = make_predicate()](std::uint64_t& acc, const Partition& p) mutable {
            if (pred(p)) ++acc;
        };
    });
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_power_factorization(
    std::uint64_t d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        std::uint32_t e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        factors.emplace_back(static_cast<std::uint32_t>(p), e);
    }
    if (d > 1) {
        if (d > std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("divisor has a prime factor exceeding 32 bits");
        factors.emplace_back(static_cast<std::uint32_t>(d), 1);
    }
    return factors;
}

inline std::string join_parts(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += '+';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace detail

/// Proportion of lambda |- n with d | chi^lambda_mu, by Murnaghan-Nakayama
/// evaluation. A vanishing character counts as divisible for every d.
inline CensusReport divisibility_census(std::uint32_t n, const Partition& mu, std::uint64_t d,
                                        unsigned workers = 1) {
    if (d < 2) throw std::invalid_argument("divisor must be at least 2");
    const CycleType ct(mu, n);  // rejects k > n
    const auto cycles = ct.full_type();
    const std::uint64_t count =
        detail::sharded_partition_count(n, workers, [&cycles, d] {
            return [ev = CharacterEvaluator(cycles), d](const Partition& lam) mutable {
                return ev.evaluate(lam) % d == 0;
            };
        });
    return {n, "chars", "mu=" + detail::join_parts(mu) + ";d=" + std::to_string(d), count,
            partition_count(n)};
}

/// Same count as divisibility_census at mu = (1), but decided from Macdonald
/// valuations of the prime-power factors of d; no big integers involved.
inline CensusReport degree_divisibility_census(std::uint32_t n, std::uint64_t d,
                                               unsigned workers = 1) {
    if (d < 2) throw std::invalid_argument("divisor must be at least 2");
    const auto factors = detail::prime_power_factorization(d);
    const std::uint64_t count = detail::sharded_partition_count(n, workers, [&factors, n] {
        return [&factors, n](const Partition& lam) {
            for (const auto& [q, e] : factors) {
                if (q > n) return false;  // v_q(n!) = 0, so q never divides f_lambda
                if (degree_valuation_macdonald(lam, q) < e) return false;
            }
            return true;
        };
    });
    return {n, "degrees", "d=" + std::to_string(d), count, partition_count(n)};
}

/// Number of lambda |- n with v_q(f_lambda) <= m + (q-1) log_q n, the
/// comparison done in exact integer arithmetic.
inline CensusReport theorem_a_census(std::uint32_t n, std::uint32_t q, std::uint32_t m,
                                     unsigned workers = 1) {
    const std::int64_t threshold = small_valuation_threshold(n, q, m);
    const std::uint64_t count = detail::sharded_partition_count(n, workers, [q, threshold] {
        return [q, threshold](const Partition& lam) {
            return static_cast<std::int64_t>(degree_valuation_macdonald(lam, q)) <= threshold;
        };
    });
    return {n, "theorem-a", "q=" + std::to_string(q) + ";m=" + std::to_string(m), count,
            partition_count(n)};
}

/// Exact distribution of v_q(f_lambda) over all lambda |- n.
inline std::map<std::uint32_t, std::uint64_t> valuation_histogram(std::uint32_t n,
                                                                  std::uint32_t q,
                                                                  unsigned workers = 1) {
    require_prime(q);
    using Histogram = std::map<std::uint32_t, std::uint64_t>;
    return detail::sharded_partition_fold<Histogram>(n, workers, [q] {
        return [q](Histogram& h, const Partition& lam) {
            ++h[degree_valuation_macdonald(lam, q)];
        };
    });
}

/// c_q(n): number of q-core partitions of n, by exhaustive filter.
inline std::uint64_t core_count(std::uint32_t n, std::uint32_t q, unsigned workers = 1) {
    require_q(q);
    return detail::sharded_partition_count(
        n, workers, [q] { return [q](const Partition& lam) { return is_q_core(lam, q); }; });
}

/// ctilde_q(n) = max of c_q(i) over 1 <= i <= n.
inline std::uint64_t core_count_max(std::uint32_t n, std::uint32_t q, unsigned workers = 1) {
    require_q(q);
    std::uint64_t best = 0;
    for (std::uint32_t i = 1; i <= n; ++i)
        best = std::max(best, core_count(i, q, workers));
    return best;
}

inline CensusReport core_count_report(std::uint32_t n, std::uint32_t q, unsigned workers = 1) {
    return {n, "cores", "q=" + std::to_string(q), core_count(n, q, workers),
            partition_count(n)};
}

/// Checks p_b(n) <= ctilde_q(N_b)^(N_b) * (qn + N_b)^(N_b) with everything
/// computed exhaustively, plus the binomial step of the bounding chain.
inline BoundReport counting_bound(std::uint32_t n, std::uint32_t q, std::uint32_t b,
                                  unsigned workers = 1) {
    require_prime(q);
    if (n == 0) throw std::invalid_argument("counting bound requires n >= 1");
    const std::uint32_t n_b = (q - 1) * (floor_log(n, q) + b + 1);
    const std::uint64_t p_b = detail::sharded_partition_count(n, workers, [q, b] {
        return [q, b](const Partition& lam) { return degree_valuation_macdonald(lam, q) <= b; };
    });
    const std::uint64_t ctilde = core_count_max(n_b, q, workers);
    const std::uint64_t base = static_cast<std::uint64_t>(q) * n + n_b;
    const BigInt power_term = int_pow(BigInt(base), n_b);
    const BigInt bound = int_pow(BigInt(ctilde), n_b) * power_term;
    return {n,     q, b, n_b, p_b, bound, BigInt(p_b) <= bound,
            binomial(base, n_b) <= power_term};
}

inline CensusReport as_report(const BoundReport& r) {
    return {r.n,
            "bound",
            "q=" + std::to_string(r.q) + ";b=" + std::to_string(r.b) + ";Nb=" +
                std::to_string(r.n_b) + ";holds=" + (r.holds ? "true" : "false"),
            r.p_b,
            partition_count(r.n)};
}

struct DegreesQuery {
    std::uint64_t d = 2;
};
struct CharsQuery {
    Partition mu;
    std::uint64_t d = 2;
};
struct TheoremAQuery {
    std::uint32_t q = 2;
    std::uint32_t m = 0;
};
using TrendQuery = std::variant<DegreesQuery, CharsQuery, TheoremAQuery>;

/// One report per n, in order. Sharding makes every cell independent of the
/// worker count.
inline std::vector<CensusReport> trend_report(const std::vector<std::uint32_t>& ns,
                                              const TrendQuery& query, unsigned workers = 1) {
    if (ns.empty()) throw std::invalid_argument("trend requires at least one n");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw std::invalid_argument("trend ns must be ascending");
    std::vector<CensusReport> out;
    out.reserve(ns.size());
    for (auto n : ns)
        out.push_back(std::visit(
            [&](const auto& spec) -> CensusReport {
                using T = std::decay_t<decltype(spec)>;
                if constexpr (std::is_same_v<T, DegreesQuery>)
                    return degree_divisibility_census(n, spec.d, workers);
                else if constexpr (std::is_same_v<T, CharsQuery>)
                    return divisibility_census(n, spec.mu, spec.d, workers);
                else
                    return theorem_a_census(n, spec.q, spec.m, workers);
            },
            query));
    return out;
}

}  // namespace charcensus
