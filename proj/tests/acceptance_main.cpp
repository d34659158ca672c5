// Acceptance suite: each criterion prints one pass/fail line and the binary
// exits with the number of failures. All comparisons are exact; the frozen
// census numbers were computed independently before being pinned here.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "charcensus/abacus.hpp"
#include "charcensus/census.hpp"
#include "charcensus/character.hpp"
#include "charcensus/partition.hpp"
#include "charcensus/report_io.hpp"
#include "charcensus/valuation.hpp"

using namespace charcensus;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

/// SYT count by recursive corner removal; independent of the hook formula.
BigInt syt_count_by_removal(const std::vector<std::uint32_t>& parts,
                            std::map<std::vector<std::uint32_t>, BigInt>& memo) {
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;  // not a corner
        std::vector<std::uint32_t> sub = parts;
        if (--sub[i] == 0) sub.pop_back();
        total += syt_count_by_removal(sub, memo);
    }
    return memo.emplace(parts, std::move(total)).first->second;
}

bool ratio_greater(const CensusReport& a, const CensusReport& b) {
    return a.numerator * b.denominator > b.numerator * a.denominator;
}

Check criterion_macdonald_equals_hooks() {
    Check c;
    for (std::uint32_t n = 0; n <= 40 && c.ok; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
                if (!c.ok) return;
                const auto tower_route = degree_valuation_macdonald(lam, q);
                const auto hook_route = degree_valuation_hooks(lam, q);
                c.expect(tower_route == hook_route,
                         "mismatch at " + lam.to_string() + " q=" + std::to_string(q));
            }
        });
    return c;
}

Check criterion_tower_bijection() {
    Check c;
    for (std::uint32_t n = 0; n <= 25 && c.ok; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            for (std::uint32_t q : {2u, 3u, 5u}) {
                if (!c.ok) return;
                const CoreTower tower = core_tower(lam, q);
                c.expect(tower_to_partition(tower) == lam,
                         "roundtrip failed at " + lam.to_string() + " q=" + std::to_string(q));
                std::uint64_t weighted = 0;
                std::uint64_t power = 1;
                for (auto w : weight_vector(tower).w) {
                    weighted += std::uint64_t(w) * power;
                    power *= q;
                }
                c.expect(weighted == lam.size(),
                         "weight constraint failed at " + lam.to_string() +
                             " q=" + std::to_string(q));
            }
        });
    return c;
}

Check criterion_lassalle_integrality() {
    Check c;
    for (std::uint32_t n = 1; n <= 14 && c.ok; ++n)
        for (std::uint32_t k = 0; k <= std::min(n, 5u) && c.ok; ++k)
            for_each_partition(k, [&](const Partition& mu) {
                if (!c.ok) return;
                const CycleType ct(mu, n);
                for_each_partition(n, [&](const Partition& lam) {
                    if (!c.ok) return;
                    try {
                        const auto dec = lassalle_decompose(lam, ct);
                        c.expect(dec.chi * dec.falling == dec.f * dec.a,
                                 "identity failed at " + lam.to_string());
                    } catch (const std::exception& e) {
                        c.expect(false, "threw at " + lam.to_string() + " mu=" +
                                            mu.to_string() + ": " + e.what());
                    }
                });
            });
    return c;
}

Check criterion_character_correctness() {
    Check c;

    // column orthogonality against centralizer orders, n <= 8
    for (std::uint32_t n = 1; n <= 8 && c.ok; ++n) {
        const auto types = partitions_of(n);
        const auto lams = partitions_of(n);
        std::vector<std::vector<BigInt>> table(types.size());
        for (std::size_t s = 0; s < types.size(); ++s) {
            CharacterEvaluator ev(CycleType(types[s], n).full_type());
            for (const auto& lam : lams) table[s].push_back(ev.evaluate(lam));
        }
        for (std::size_t s = 0; s < types.size() && c.ok; ++s)
            for (std::size_t t = s; t < types.size() && c.ok; ++t) {
                BigInt sum = 0;
                for (std::size_t i = 0; i < lams.size(); ++i) sum += table[s][i] * table[t][i];
                if (s == t) {
                    BigInt z = 1;
                    const auto& parts = types[s].parts();
                    for (std::size_t i = 0; i < parts.size();) {
                        std::size_t j = i;
                        while (j < parts.size() && parts[j] == parts[i]) ++j;
                        for (std::size_t m = 1; m <= j - i; ++m) z *= parts[i] * BigInt(m);
                        i = j;
                    }
                    c.expect(sum == z, "diagonal orthogonality failed at n=" +
                                           std::to_string(n) + " type " + types[s].to_string());
                } else {
                    c.expect(sum == 0, "off-diagonal orthogonality failed at n=" +
                                           std::to_string(n));
                }
            }
    }

    // character at the identity equals the hook-formula degree, n <= 12,
    // with the identity value certified by corner-removal SYT counting
    std::map<std::vector<std::uint32_t>, BigInt> memo;
    for (std::uint32_t n = 0; n <= 12 && c.ok; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            if (!c.ok) return;
            const BigInt at_identity = character(lam, CycleType(Partition(), n));
            c.expect(at_identity == degree(lam),
                     "identity character != degree at " + lam.to_string());
            c.expect(at_identity == syt_count_by_removal(lam.parts(), memo),
                     "degree != SYT count at " + lam.to_string());
        });

    // conjugation symmetry, n <= 10
    for (std::uint32_t n = 1; n <= 10 && c.ok; ++n)
        for (std::uint32_t k = 1; k <= n && c.ok; ++k)
            for_each_partition(k, [&](const Partition& mu) {
                if (!c.ok) return;
                const CycleType ct(mu, n);
                const int sign = cycle_type_sign(ct);
                CharacterEvaluator ev(ct.full_type());
                for_each_partition(n, [&](const Partition& lam) {
                    if (!c.ok) return;
                    c.expect(ev.evaluate(conjugate(lam)) == sign * ev.evaluate(lam),
                             "conjugation symmetry failed at " + lam.to_string() + " mu=" +
                                 mu.to_string());
                });
            });
    return c;
}

Check criterion_valuation_inequality() {
    Check c;
    for (std::uint32_t n = 1; n <= 14 && c.ok; ++n)
        for (std::uint32_t k = 1; k <= std::min(n, 4u) && c.ok; ++k)
            for_each_partition(k, [&](const Partition& mu) {
                if (!c.ok) return;
                CharacterEvaluator ev(CycleType(mu, n).full_type());
                for (std::uint32_t q : {2u, 3u}) {
                    const auto v_falling = falling_factorial_valuation(n, k, q);
                    for_each_partition(n, [&](const Partition& lam) {
                        if (!c.ok) return;
                        const BigInt chi = ev.evaluate(lam);
                        if (chi == 0) return;
                        std::int64_t v_chi = 0;
                        BigInt a = abs(chi);
                        while (a % q == 0) {
                            a /= q;
                            ++v_chi;
                        }
                        const std::int64_t lower =
                            std::int64_t(degree_valuation_macdonald(lam, q)) -
                            std::int64_t(v_falling);
                        c.expect(v_chi >= lower, "inequality failed at " + lam.to_string() +
                                                     " mu=" + mu.to_string() +
                                                     " q=" + std::to_string(q));
                    });
                }
            });
    return c;
}

Check criterion_main_theorem_trend(double* fifty_seconds) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r50 = degree_divisibility_census(50, 2, 1);
    *fifty_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto r10 = degree_divisibility_census(10, 2, 1);
    const auto r30 = degree_divisibility_census(30, 2, 1);

    c.expect(r10.numerator == 26 && r10.denominator == 42, "n=10 count drifted");
    c.expect(r30.numerator == 4580 && r30.denominator == 5604, "n=30 count drifted");
    c.expect(r50.numerator == 203202 && r50.denominator == 204226, "n=50 count drifted");
    c.expect(ratio_greater(r30, r10) && ratio_greater(r50, r30),
             "ratios are not strictly increasing");
    c.expect(r50.numerator * 100 > r50.denominator * 99, "n=50 ratio does not exceed 0.99");
    c.expect(*fifty_seconds < 300.0, "n=50 pass exceeded five minutes");
    return c;
}

Check criterion_theorem_a_trend() {
    Check c;
    const auto r10 = theorem_a_census(10, 2, 0, 1);
    const auto r30 = theorem_a_census(30, 2, 0, 1);
    const auto r50 = theorem_a_census(50, 2, 0, 1);
    c.expect(r10.numerator == 36 && r10.denominator == 42, "n=10 count drifted");
    c.expect(r30.numerator == 3760 && r30.denominator == 5604, "n=30 count drifted");
    c.expect(r50.numerator == 80928 && r50.denominator == 204226, "n=50 count drifted");
    c.expect(ratio_greater(r10, r30) && ratio_greater(r30, r50),
             "ratios are not strictly decreasing");
    return c;
}

Check criterion_counting_bound() {
    Check c;
    const unsigned workers = default_worker_count();
    for (std::uint32_t n = 1; n <= 25 && c.ok; ++n)
        for (std::uint32_t q : {2u, 3u})
            for (std::uint32_t b = 0; b <= 2 && c.ok; ++b) {
                const auto report = counting_bound(n, q, b);
                c.expect(report.holds, "bound failed at n=" + std::to_string(n) +
                                           " q=" + std::to_string(q) +
                                           " b=" + std::to_string(b));
                c.expect(report.binomial_step_ok,
                         "binomial step failed at n=" + std::to_string(n));
            }
    for (std::uint32_t n = 0; n <= 60 && c.ok; ++n) {
        c.expect(core_count(n, 2, workers) <= 1,
                 "c_2 bound failed at n=" + std::to_string(n));
        c.expect(core_count(n, 3, workers) <= 3ull * n + 1,
                 "c_3 bound failed at n=" + std::to_string(n));
    }
    return c;
}

Check criterion_determinism() {
    Check c;
    const auto render = [](unsigned workers) {
        std::vector<CensusReport> reports;
        for (auto& r : trend_report({10, 20, 30}, DegreesQuery{2}, workers))
            reports.push_back(r);
        for (auto& r : trend_report({8, 10, 12}, CharsQuery{Partition({2}), 2}, workers))
            reports.push_back(r);
        for (auto& r : trend_report({10, 20, 30}, TheoremAQuery{2, 0}, workers))
            reports.push_back(r);
        return census_csv(reports);
    };
    const std::string one = render(1);
    c.expect(render(4) == one, "worker count 4 changed the CSV bytes");
    c.expect(render(8) == one, "worker count 8 changed the CSV bytes");
    return c;
}

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = untimed
    std::function<Check()> fn;
};

}  // namespace

int main() {
    double fifty_seconds = 0.0;
    const std::vector<Criterion> criteria{
        {"tower valuation equals hook-length valuation, n <= 40, q in {2,3,5,7}", 120.0,
         criterion_macdonald_equals_hooks},
        {"tower bijection roundtrip and weight constraint, n <= 25, q in {2,3,5}", 30.0,
         criterion_tower_bijection},
        {"Lassalle coefficient is integral, n <= 14, |mu| <= 5", 120.0,
         criterion_lassalle_integrality},
        {"column orthogonality (n <= 8), identity degree (n <= 12), conjugation (n <= 10)",
         0.0, criterion_character_correctness},
        {"v_q(chi) >= v_q(f) - v_q((n)_k), n <= 14, |mu| <= 4, q in {2,3}", 0.0,
         criterion_valuation_inequality},
        {"degree divisibility d=2 trend at n in {10,30,50}, final ratio > 0.99", 0.0,
         [&] { return criterion_main_theorem_trend(&fifty_seconds); }},
        {"theorem-a q=2 m=0 trend at n in {10,30,50} strictly decreasing", 0.0,
         criterion_theorem_a_trend},
        {"counting bound holds (n <= 25, q in {2,3}, b <= 2); core count bounds to n = 60",
         0.0, criterion_counting_bound},
        {"census CSV byte-identical across worker counts {1,4,8}", 0.0,
         criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check result = criteria[i].fn();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].limit_seconds > 0 && seconds > criteria[i].limit_seconds)
            result.expect(false, "exceeded the " + std::to_string(criteria[i].limit_seconds) +
                                     "s budget");
        std::ostringstream line;
        line.precision(1);
        line << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
             << criteria[i].name << " (" << std::fixed << seconds << "s)";
        if (!result.ok) line << " -- " << result.detail;
        std::cout << line.str() << "\n";
        if (!result.ok) ++failures;
    }
    if (fifty_seconds > 0)
        std::cout << "note: n=50 degree census completed in " << fifty_seconds << "s\n";
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                              " criteria failed")
              << "\n";
    return failures;
}
