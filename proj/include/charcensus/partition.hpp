#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charcensus/bigint.hpp"

namespace charcensus {

/// Integer partition: weakly decreasing positive parts, largest first.
/// Immutable after construction; the empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("parts must be weakly decreasing and positive");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
    }

    /// Trusted constructor for callers that already guarantee the shape invariant.
    static Partition unchecked(std::vector<std::uint32_t> parts) {
        Partition p;
        p.parts_ = std::move(parts);
        p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), std::uint32_t{0});
        return p;
    }

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint32_t size() const { return size_; }    // |lambda|, the n it partitions
    std::uint32_t length() const { return static_cast<std::uint32_t>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-indexed), 0 past the last part.
    std::uint32_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    /// Bracket rendering: "[3,1]"; the empty partition renders as "[]".
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        out += ']';
        return out;
    }

private:
    std::vector<std::uint32_t> parts_;
    std::uint32_t size_ = 0;
};

/// Transpose of the Young diagram; an involution.
inline Partition conjugate(const Partition& lam) {
    if (lam.empty()) return {};
    std::vector<std::uint32_t> cols(lam.parts()[0], 0);
    for (auto p : lam.parts())
        for (std::uint32_t j = 0; j < p; ++j) ++cols[j];
    return Partition::unchecked(std::move(cols));
}

/// Hook length of every cell (arm + leg + 1), as a multiset sorted descending.
inline std::vector<std::uint32_t> hook_lengths(const Partition& lam) {
    std::vector<std::uint32_t> hooks;
    hooks.reserve(lam.size());
    if (lam.empty()) return hooks;
    const auto cols = conjugate(lam).parts();
    const auto& rows = lam.parts();
    for (std::uint32_t i = 0; i < rows.size(); ++i)
        for (std::uint32_t j = 0; j < rows[i]; ++j)
            hooks.push_back(rows[i] - j + cols[j] - i - 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

/// p(n) by Euler's pentagonal recurrence, exact at any n.
inline BigInt partition_count(std::uint32_t n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::uint32_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const bool plus = (k % 2 == 1);
            acc += plus ? p[m - g1] : -p[m - g1];
            const std::uint64_t g2 = g1 + k;
            if (g2 <= m) acc += plus ? p[m - g2] : -p[m - g2];
        }
        p[m] = std::move(acc);
    }
    return p[n];
}

/// p(n) narrowed to 64 bits, as required for index-based sharding.
inline std::uint64_t partition_count_u64(std::uint32_t n) {
    const BigInt p = partition_count(n);
    if (p > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("p(n) exceeds 64 bits; indexed enumeration unavailable");
    return p.convert_to<std::uint64_t>();
}

namespace detail {

/// table[m][k] = number of partitions of m with every part <= k (k clamped to m).
inline std::vector<std::vector<std::uint64_t>> bounded_count_table(std::uint32_t n) {
    if (n > 400)
        throw std::overflow_error("bounded partition counts exceed 64 bits past n = 400");
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint32_t k = 0; k <= n; ++k) t[0][k] = 1;
    for (std::uint32_t m = 1; m <= n; ++m)
        for (std::uint32_t k = 1; k <= n; ++k)
            t[m][k] = (k <= m) ? t[m][k - 1] + t[m - k][k] : t[m][m];
    return t;
}

}  // namespace detail

/// Partition of n at `index` in the canonical reverse-lexicographic order:
/// (n) has index 0, (1^n) has index p(n) - 1.
inline Partition partition_at_index(std::uint32_t n, std::uint64_t index) {
    const auto table = detail::bounded_count_table(n);
    if (index >= table[n][n]) throw std::out_of_range("partition index out of range");
    std::vector<std::uint32_t> parts;
    std::uint32_t m = n;
    std::uint32_t maxp = n;
    while (m > 0) {
        for (std::uint32_t f = std::min(maxp, m);; --f) {
            const std::uint64_t cnt = table[m - f][std::min(f, m - f)];
            if (index < cnt) {
                parts.push_back(f);
                maxp = f;
                m -= f;
                break;
            }
            index -= cnt;
        }
    }
    return Partition::unchecked(std::move(parts));
}

/// Streams the partitions of n exactly once, in reverse-lexicographic order.
/// The order is fixed: within partitions written largest part first, the part
/// sequences themselves descend lexicographically, so (n) comes first and
/// (1^n) last. A second constructor starts mid-stream for sharded consumers.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::uint32_t n) : n_(n) {
        cur_ = n ? std::vector<std::uint32_t>{n} : std::vector<std::uint32_t>{};
        has_cur_ = true;
    }

    PartitionEnumerator(std::uint32_t n, std::uint64_t start_index) : n_(n), index_(start_index) {
        const std::uint64_t total = partition_count_u64(n);
        if (start_index < total) {
            cur_ = partition_at_index(n, start_index).parts();
            has_cur_ = true;
        }
    }

    /// Index of the partition the next call to next() will return.
    std::uint64_t index() const { return index_; }

    std::optional<Partition> next() {
        if (!has_cur_) return std::nullopt;
        Partition out = Partition::unchecked(cur_);
        ++index_;
        advance();
        return out;
    }

private:
    void advance() {
        // Successor in reverse-lexicographic order: decrement the last part
        // exceeding 1, then redistribute the freed cells greedily.
        if (cur_.empty() || cur_[0] == 1) {
            has_cur_ = false;
            return;
        }
        std::size_t j = cur_.size();
        while (cur_[j - 1] == 1) --j;
        --j;  // last index with part > 1
        const std::uint32_t v = cur_[j] - 1;
        std::uint32_t rem = static_cast<std::uint32_t>(cur_.size() - 1 - j) + 1;
        cur_.resize(j + 1);
        cur_[j] = v;
        while (rem > v) {
            cur_.push_back(v);
            rem -= v;
        }
        if (rem) cur_.push_back(rem);
    }

    std::uint32_t n_;
    std::uint64_t index_ = 0;
    bool has_cur_ = false;
    std::vector<std::uint32_t> cur_;
};

template <typename Fn>
inline void for_each_partition(std::uint32_t n, Fn&& fn) {
    PartitionEnumerator en(n);
    while (auto p = en.next()) fn(*p);
}

/// All partitions of n, materialized in enumeration order. Intended for small n.
inline std::vector<Partition> partitions_of(std::uint32_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Half-open slice [begin, end) of the canonical enumeration of partitions of n.
struct PartitionIndexRange {
    std::uint32_t n = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Splits [0, p(n)) into at most `workers` contiguous, near-equal ranges.
inline std::vector<PartitionIndexRange> split_index_range(std::uint32_t n, unsigned workers) {
    if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
    const std::uint64_t total = partition_count_u64(n);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<PartitionIndexRange> ranges;
    for (std::uint64_t b = 0; b < total; b += chunk)
        ranges.push_back({n, b, std::min(b + chunk, total)});
    if (ranges.empty()) ranges.push_back({n, 0, 0});
    return ranges;
}

}  // namespace charcensus
