#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charcensus/partition.hpp"

namespace charcensus {

inline void require_q(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
}

/// Abacus encoding of a partition. With `count` beads the positions are
/// beta_i = lambda_i + (count - i) for i = 1..count (parts past the last are 0),
/// which is strictly decreasing by construction. Position b sits on runner
/// b mod q at level b div q; this runner convention, together with a bead
/// count that is a multiple of q, is the one fixed convention shared by
/// q_core, q_quotient, from_core_and_quotient and the tower operations.
struct BetaSet {
    std::vector<std::uint32_t> beads;  // strictly decreasing
    std::uint32_t bead_count() const { return static_cast<std::uint32_t>(beads.size()); }
};

inline BetaSet beta_set(const Partition& lam, std::uint32_t bead_count) {
    if (bead_count < lam.length()) throw std::invalid_argument("insufficient beads");
    std::vector<std::uint32_t> beads(bead_count);
    for (std::uint32_t i = 0; i < bead_count; ++i)
        beads[i] = lam.part(i) + (bead_count - 1 - i);
    return {std::move(beads)};
}

namespace detail {

/// Decodes a strictly decreasing bead sequence back to its partition.
inline Partition partition_from_bead_positions(std::span<const std::uint32_t> beads_desc) {
    const std::size_t count = beads_desc.size();
    std::vector<std::uint32_t> parts;
    parts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t offset = static_cast<std::uint32_t>(count - 1 - i);
        if (beads_desc[i] == offset) break;  // staircase tail encodes zero parts
        parts.push_back(beads_desc[i] - offset);
    }
    return Partition::unchecked(std::move(parts));
}

/// Least multiple of q covering the rows of lam.
inline std::uint32_t runner_bead_count(const Partition& lam, std::uint32_t q) {
    return ((lam.length() + q - 1) / q) * q;
}

}  // namespace detail

inline Partition partition_from_beta(const BetaSet& b) {
    for (std::size_t i = 1; i < b.beads.size(); ++i)
        if (b.beads[i] >= b.beads[i - 1])
            throw std::invalid_argument("beads must be strictly decreasing");
    return detail::partition_from_bead_positions(b.beads);
}

/// True iff no hook length of lam is divisible by q. On the abacus: every
/// bead at position >= q has its q-predecessor occupied.
inline bool is_q_core(const Partition& lam, std::uint32_t q) {
    require_q(q);
    if (lam.empty()) return true;
    const auto beta = beta_set(lam, lam.length());
    std::vector<bool> occupied(beta.beads.front() + 1, false);
    for (auto b : beta.beads) occupied[b] = true;
    for (auto b : beta.beads)
        if (b >= q && !occupied[b - q]) return false;
    return true;
}

/// The q-core: push every bead to the bottom of its runner. Equals the fixed
/// point of rim q-hook removal, independently of removal order.
inline Partition q_core(const Partition& lam, std::uint32_t q) {
    require_q(q);
    const std::uint32_t count = detail::runner_bead_count(lam, q);
    if (count == 0) return {};
    std::vector<std::uint32_t> per_runner(q, 0);
    for (auto b : beta_set(lam, count).beads) ++per_runner[b % q];
    std::vector<std::uint32_t> beads;
    beads.reserve(count);
    for (std::uint32_t r = 0; r < q; ++r)
        for (std::uint32_t level = 0; level < per_runner[r]; ++level)
            beads.push_back(level * q + r);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    return detail::partition_from_bead_positions(beads);
}

/// The q-quotient: component r is the partition read from the bead levels on
/// runner r. Sizes satisfy |lam| = |q_core(lam)| + q * sum of component sizes.
inline std::vector<Partition> q_quotient(const Partition& lam, std::uint32_t q) {
    require_q(q);
    const std::uint32_t count = detail::runner_bead_count(lam, q);
    std::vector<std::vector<std::uint32_t>> levels(q);
    if (count != 0) {
        // beta positions descend, so each runner's levels arrive descending
        for (auto b : beta_set(lam, count).beads) levels[b % q].push_back(b / q);
    }
    std::vector<Partition> components;
    components.reserve(q);
    for (std::uint32_t r = 0; r < q; ++r)
        components.push_back(detail::partition_from_bead_positions(levels[r]));
    return components;
}

/// Exact inverse of (q_core, q_quotient) under the runner convention above.
inline Partition from_core_and_quotient(const Partition& core,
                                        std::span<const Partition> components,
                                        std::uint32_t q) {
    require_q(q);
    if (components.size() != q)
        throw std::invalid_argument("quotient must have exactly q components");
    if (!is_q_core(core, q)) throw std::invalid_argument("not a core");

    const auto runner_counts = [&](std::uint32_t runners) {
        std::vector<std::uint32_t> k(q, 0);
        if (runners != 0)
            for (auto b : beta_set(core, runners * q).beads) ++k[b % q];
        return k;
    };

    // Grow the abacus until every runner has room for its component's rows;
    // adding q beads adds exactly one bead to every runner.
    std::uint32_t runners = (core.length() + q - 1) / q;
    auto k = runner_counts(runners);
    std::uint32_t grow = 0;
    for (std::uint32_t r = 0; r < q; ++r)
        if (components[r].length() > k[r]) grow = std::max(grow, components[r].length() - k[r]);
    if (grow != 0) {
        runners += grow;
        k = runner_counts(runners);
    }

    std::vector<std::uint32_t> beads;
    beads.reserve(runners * q);
    for (std::uint32_t r = 0; r < q; ++r)
        for (std::uint32_t i = 0; i < k[r]; ++i) {
            const std::uint32_t level = components[r].part(i) + (k[r] - 1 - i);
            beads.push_back(level * q + r);
        }
    std::sort(beads.begin(), beads.end(), std::greater<>());
    return detail::partition_from_bead_positions(beads);
}

/// Finite-depth q-core tower. Row i holds q^i q-cores in node order, i.e.
/// lexicographic on the tuples addressing the q-ary tree; rows past depth()
/// are implicitly all-empty and never stored, so the last stored row of a
/// tower built by core_tower always contains a non-empty core.
struct CoreTower {
    std::uint32_t q = 2;
    std::vector<std::vector<Partition>> rows;

    std::uint32_t depth() const { return static_cast<std::uint32_t>(rows.size()); }
};

/// Weight profile of a tower: w[i] is the total cell count of row i.
struct WeightVector {
    std::uint32_t q = 2;
    std::vector<std::uint32_t> w;
};

inline CoreTower core_tower(const Partition& lam, std::uint32_t q) {
    require_q(q);
    CoreTower tower{q, {}};
    std::vector<Partition> level{lam};
    const auto all_empty = [](const std::vector<Partition>& v) {
        return std::all_of(v.begin(), v.end(), [](const Partition& p) { return p.empty(); });
    };
    while (!all_empty(level)) {
        std::vector<Partition> row;
        std::vector<Partition> next;
        row.reserve(level.size());
        next.reserve(level.size() * q);
        for (const auto& p : level) {
            if (p.empty()) {
                row.emplace_back();
                next.insert(next.end(), q, Partition{});
                continue;
            }
            row.push_back(q_core(p, q));
            auto comps = q_quotient(p, q);
            next.insert(next.end(), std::make_move_iterator(comps.begin()),
                        std::make_move_iterator(comps.end()));
        }
        tower.rows.push_back(std::move(row));
        level = std::move(next);
    }
    return tower;
}

inline WeightVector weight_vector(const CoreTower& tower) {
    WeightVector wv{tower.q, {}};
    wv.w.reserve(tower.rows.size());
    for (const auto& row : tower.rows) {
        std::uint32_t w = 0;
        for (const auto& node : row) w += node.size();
        wv.w.push_back(w);
    }
    return wv;
}

/// w(lambda): total cell count over every row of the tower.
inline std::uint64_t tower_weight(const CoreTower& tower) {
    std::uint64_t w = 0;
    for (const auto& row : tower.rows)
        for (const auto& node : row) w += node.size();
    return w;
}

/// Inverse of core_tower: rebuilds the partition bottom-up.
inline Partition tower_to_partition(const CoreTower& tower) {
    require_q(tower.q);
    std::uint64_t expected = 1;
    for (const auto& row : tower.rows) {
        if (row.size() != expected) throw std::invalid_argument("invalid tower");
        for (const auto& node : row)
            if (!is_q_core(node, tower.q)) throw std::invalid_argument("invalid tower");
        expected *= tower.q;
    }
    if (tower.rows.empty()) return {};
    std::vector<Partition> current = tower.rows.back();
    for (std::size_t i = tower.rows.size() - 1; i-- > 0;) {
        std::vector<Partition> up;
        up.reserve(tower.rows[i].size());
        for (std::size_t j = 0; j < tower.rows[i].size(); ++j) {
            const std::span<const Partition> comps(current.data() + j * tower.q, tower.q);
            up.push_back(from_core_and_quotient(tower.rows[i][j], comps, tower.q));
        }
        current = std::move(up);
    }
    return current.front();
}

/// One line per stored row; partitions in node order separated by a single
/// space, each in bracket form ("[]" for empty). Depth-0 towers render empty.
inline std::string render_tower(const CoreTower& tower) {
    std::string out;
    for (const auto& row : tower.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j].to_string();
        }
        out += '\n';
    }
    return out;
}

/// All q-cores of n in canonical enumeration order; the length is c_q(n).
inline std::vector<Partition> enumerate_q_cores(std::uint32_t n, std::uint32_t q) {
    require_q(q);
    std::vector<Partition> cores;
    for_each_partition(n, [&](const Partition& p) {
        if (is_q_core(p, q)) cores.push_back(p);
    });
    return cores;
}

}  // namespace charcensus
