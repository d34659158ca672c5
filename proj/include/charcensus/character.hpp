#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charcensus/bigint.hpp"
#include "charcensus/partition.hpp"
#include "charcensus/valuation.hpp"

namespace charcensus {

/// Cycle type of a permutation in S_n: explicit parts mu plus the implied
/// fixed points 1^(n-k). Callers pass mu and n separately; padding is never
/// built by hand.
class CycleType {
public:
    CycleType(Partition mu, std::uint32_t degree_n) : mu_(std::move(mu)), n_(degree_n) {
        if (mu_.size() > n_) throw std::invalid_argument("cycle type exceeds ambient degree");
    }

    const Partition& mu() const { return mu_; }
    std::uint32_t k() const { return mu_.size(); }
    std::uint32_t degree() const { return n_; }

    /// Full padded type (mu_1, ..., mu_m, 1^(n-k)), descending.
    std::vector<std::uint32_t> full_type() const {
        std::vector<std::uint32_t> cycles = mu_.parts();
        cycles.resize(cycles.size() + (n_ - mu_.size()), 1);
        return cycles;
    }

private:
    Partition mu_;
    std::uint32_t n_;
};

/// f_lambda by the hook length formula n! / prod(hooks); the division is exact.
inline BigInt degree(const Partition& lam) {
    BigInt hook_product = 1;
    for (auto h : hook_lengths(lam)) hook_product *= h;
    BigInt quot, rem;
    boost::multiprecision::divide_qr(factorial(lam.size()), hook_product, quot, rem);
    if (rem != 0) throw std::logic_error("hook product does not divide n!");
    return quot;
}

/// Sign of any permutation with this cycle type: (-1)^sum(mu_i - 1).
inline int cycle_type_sign(const CycleType& ct) {
    std::uint32_t transpositions = 0;
    for (auto p : ct.mu().parts()) transpositions += p - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

/// Murnaghan-Nakayama evaluator for one fixed cycle sequence, with a memo
/// table keyed on (remaining partition, position in the sequence). Cycles are
/// stripped largest first, so once only fixed points remain the value is the
/// degree of what is left. One evaluator serves every partition of the same
/// size; reuse across a census pass is what makes the table pay off. Not
/// safe for concurrent use; give each worker its own instance.
class CharacterEvaluator {
public:
    explicit CharacterEvaluator(std::vector<std::uint32_t> cycles) : cycles_(std::move(cycles)) {
        for (auto c : cycles_)
            if (c == 0) throw std::invalid_argument("cycle lengths must be positive");
        std::sort(cycles_.begin(), cycles_.end(), std::greater<>());
        for (auto c : cycles_) total_ += c;
        ones_from_ = static_cast<std::uint32_t>(cycles_.size());
        while (ones_from_ > 0 && cycles_[ones_from_ - 1] == 1) --ones_from_;
    }

    std::uint32_t total() const { return total_; }

    BigInt evaluate(const Partition& lam) {
        if (lam.size() != total_)
            throw std::invalid_argument("partition and cycle type disagree");
        return eval(lam.parts(), 0);
    }

private:
    struct Key {
        std::vector<std::uint32_t> parts;
        std::uint32_t depth;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            const auto mix = [&h](std::size_t x) {
                h ^= x;
                h *= 1099511628211ull;
            };
            mix(k.depth);
            for (auto p : k.parts) mix(p);
            return h;
        }
    };

    BigInt eval(const std::vector<std::uint32_t>& parts, std::uint32_t depth) {
        if (parts.empty()) return 1;  // all cycles consumed (sizes always balance)
        Key key{parts, std::min(depth, ones_from_)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt value;
        if (depth >= ones_from_) {
            // only fixed points left: the character at the identity
            value = degree(Partition::unchecked(parts));
        } else {
            value = 0;
            const std::uint32_t t = cycles_[depth];
            const std::uint32_t count = static_cast<std::uint32_t>(parts.size());
            std::vector<std::uint32_t> beta(count);
            for (std::uint32_t i = 0; i < count; ++i) beta[i] = parts[i] + (count - 1 - i);
            // A rim t-hook is a bead that can fall t positions to a free slot.
            for (std::uint32_t j = 0; j < count; ++j) {
                if (beta[j] < t) continue;
                const std::uint32_t dest = beta[j] - t;
                std::uint32_t leg = 0;
                bool occupied = false;
                for (std::uint32_t i = j + 1; i < count; ++i) {
                    if (beta[i] > dest) {
                        ++leg;
                    } else {
                        occupied = (beta[i] == dest);
                        break;
                    }
                }
                if (occupied) continue;
                std::vector<std::uint32_t> moved = beta;
                std::rotate(moved.begin() + j, moved.begin() + j + 1, moved.begin() + j + leg + 1);
                moved[j + leg] = dest;
                std::vector<std::uint32_t> sub;
                sub.reserve(count);
                for (std::uint32_t i = 0; i < count; ++i) {
                    const std::uint32_t offset = count - 1 - i;
                    if (moved[i] == offset) break;
                    sub.push_back(moved[i] - offset);
                }
                const BigInt branch = eval(sub, depth + 1);
                if (leg % 2 == 0)
                    value += branch;
                else
                    value -= branch;
            }
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

    std::vector<std::uint32_t> cycles_;
    std::uint32_t total_ = 0;
    std::uint32_t ones_from_ = 0;
    std::unordered_map<Key, BigInt, KeyHash> memo_;
};

/// chi^lambda at the cycle type (mu, 1^(n-k)). One-shot convenience; census
/// passes hold a CharacterEvaluator instead.
inline BigInt character(const Partition& lam, const CycleType& ct) {
    if (lam.size() != ct.degree())
        throw std::invalid_argument("partition and cycle type disagree");
    CharacterEvaluator ev(ct.full_type());
    return ev.evaluate(lam);
}

/// chi = (f / (n)_k) * A with A an integer; holds f, (n)_k, A and chi.
struct LassalleDecomposition {
    BigInt f;        // degree f_lambda
    BigInt falling;  // (n)_k
    BigInt a;        // the integer coefficient
    BigInt chi;      // character value, = f * a / (n)_k
};

inline LassalleDecomposition lassalle_decompose(const Partition& lam, const CycleType& ct) {
    if (lam.size() != ct.degree())
        throw std::invalid_argument("partition and cycle type disagree");
    const BigInt chi = character(lam, ct);
    const BigInt f = degree(lam);
    const BigInt falling = falling_factorial(ct.degree(), ct.k());
    BigInt quot, rem;
    boost::multiprecision::divide_qr(chi * falling, f, quot, rem);
    if (rem != 0) throw std::logic_error("Lassalle integrality violated");
    return {f, falling, quot, chi};
}

}  // namespace charcensus
